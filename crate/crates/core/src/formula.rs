//! The extremal function
//!
//! ```text
//! f(n, k) = max { n0*n1 + floor((k-1)*n0 / 2) : n0 + n1 = n }
//! ```
//!
//! `f_max` always scans every split; the closed-form maximiser from the
//! residue of `2n + k` mod 4 is exposed separately so it can be checked
//! against the scan rather than trusted.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("n must be at least {min}, got {n}")]
    SmallN { n: u64, min: u64 },
    #[error("arithmetic overflow evaluating f")]
    Overflow,
}

/// A bipartition size pair; side A (`n0`) is the side carrying the regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SplitSpec {
    pub n0: usize,
    pub n1: usize,
}

impl SplitSpec {
    pub fn new(n0: usize, n1: usize) -> SplitSpec {
        SplitSpec { n0, n1 }
    }

    pub fn n(&self) -> usize {
        self.n0 + self.n1
    }
}

/// `n0*n1 + floor((k-1)*n0/2)`.
pub fn f_value(n0: u64, n1: u64, k: u64) -> Result<u64, FormulaError> {
    if k == 0 {
        return Err(FormulaError::ZeroK);
    }
    let cross = n0.checked_mul(n1).ok_or(FormulaError::Overflow)?;
    let inside = (k - 1).checked_mul(n0).ok_or(FormulaError::Overflow)? / 2;
    cross.checked_add(inside).ok_or(FormulaError::Overflow)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FMax {
    pub value: u64,
    /// Every `n0` attaining the maximum, ascending.
    pub maximizers: Vec<u64>,
}

/// Maximises `f_value` over all splits of `n`.
pub fn f_max(n: u64, k: u64) -> Result<FMax, FormulaError> {
    if k == 0 {
        return Err(FormulaError::ZeroK);
    }
    let mut value = 0;
    let mut maximizers = Vec::new();
    for n0 in 0..=n {
        let v = f_value(n0, n - n0, k)?;
        if maximizers.is_empty() || v > value {
            value = v;
            maximizers.clear();
            maximizers.push(n0);
        } else if v == value {
            maximizers.push(n0);
        }
    }
    Ok(FMax { value, maximizers })
}

/// Which residue of `2n + k` modulo 4 applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ResidueBranch {
    Zero,
    One,
    Two,
    Three,
}

impl ResidueBranch {
    pub fn of(n: u64, k: u64) -> ResidueBranch {
        match (2 * n + k) % 4 {
            0 => ResidueBranch::Zero,
            1 => ResidueBranch::One,
            2 => ResidueBranch::Two,
            _ => ResidueBranch::Three,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ResidueBranch::Zero => "0 mod 4",
            ResidueBranch::One => "1 mod 4",
            ResidueBranch::Two => "2 mod 4",
            ResidueBranch::Three => "3 mod 4",
        }
    }
}

/// Closed-form maximiser(s) by the residue of `s = 2n + k`:
/// `(s-1)/4`, `(s-2)/4`, `{(s-3)/4, (s+1)/4}` or `s/4` for residues 1, 2, 3, 0.
pub fn predicted_maximizers(n: u64, k: u64) -> Vec<u64> {
    let s = 2 * n + k;
    match ResidueBranch::of(n, k) {
        ResidueBranch::One => vec![(s - 1) / 4],
        ResidueBranch::Two => vec![(s - 2) / 4],
        ResidueBranch::Three => vec![(s - 3) / 4, (s + 1) / 4],
        ResidueBranch::Zero => vec![s / 4],
    }
}

/// The side size used by every construction: `floor((2n + k) / 4)`.
pub fn construction_n0(n: u64, k: u64) -> u64 {
    (2 * n + k) / 4
}

/// `f(n, k) - f(n - 1, k)`.
pub fn delta_f(n: u64, k: u64) -> Result<u64, FormulaError> {
    if n < 2 {
        return Err(FormulaError::SmallN { n, min: 2 });
    }
    let hi = f_max(n, k)?.value;
    let lo = f_max(n - 1, k)?.value;
    Ok(hi - lo)
}
