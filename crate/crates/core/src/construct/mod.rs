//! Lower-bound constructions: a complete bipartite graph `K_{n0,n1}` with a
//! sparse graph embedded in one or both sides.
//!
//! Builders never certify freeness themselves. [`best_construction`] runs
//! the suspension checker on every candidate before accepting it.

pub mod exceptional;
pub mod gadgets;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{construction_n0, f_max, FormulaError, SplitSpec};
use crate::freeness::{contains_suspension_budgeted, SearchOutcome};
use crate::graph::{complete_bipartite, disjoint_union, embed_into_side, Graph, GraphError, Side};
use crate::tree::{has_matching_covering_small_class, Tree, TreeError};

pub use exceptional::{double_matching_exceptions, is_double_matching_exception, two_regular_index, two_regular_trees};
pub use gadgets::{crown, matching_on, near_regular_block, regular_blocks, short_cycles};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    Prop4,
    Prop5,
    Prop6,
    Case2DoubleMatching,
    Case2TwoRegularMatching,
    SmallSideMatching,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Prop4 => "Prop4",
            Variant::Prop5 => "Prop5",
            Variant::Prop6 => "Prop6",
            Variant::Case2DoubleMatching => "Case2DoubleMatching",
            Variant::Case2TwoRegularMatching => "Case2TwoRegularMatching",
            Variant::SmallSideMatching => "SmallSideMatching",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name().eq_ignore_ascii_case(s))
    }

    pub const ALL: [Variant; 6] = [
        Variant::Prop4,
        Variant::Prop5,
        Variant::Prop6,
        Variant::Case2DoubleMatching,
        Variant::Case2TwoRegularMatching,
        Variant::SmallSideMatching,
    ];
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("2(k-1) = {modulus} does not divide n0 = {n0}")]
    DivisibilityFailed { n0: usize, modulus: usize },
    #[error("n0 = {n0} is odd")]
    ParityFailed { n0: usize },
    #[error("tree has {order} vertices, expected {expected}")]
    WrongOrder { order: usize, expected: usize },
    #[error("{blocks} blocks cannot absorb {needed} swaps")]
    TooFewBlocks { blocks: usize, needed: usize },
    #[error("no matching saturates the smaller colour class")]
    NoSaturatingMatching,
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: usize, min: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    #[serde(skip)]
    pub graph: Graph,
    pub split: SplitSpec,
    pub edge_count: usize,
    /// `f(n, k)`.
    pub target: u64,
    pub meets_target: bool,
    pub variant: Variant,
    /// Component sizes of the graph placed in side A.
    pub gadgets_a: Vec<usize>,
    /// Component sizes of the graph placed in side B.
    pub gadgets_b: Vec<usize>,
}

impl ConstructionReport {
    fn new(
        graph: Graph,
        split: SplitSpec,
        k: usize,
        variant: Variant,
        gadgets_a: Vec<usize>,
        gadgets_b: Vec<usize>,
    ) -> Result<ConstructionReport, ConstructError> {
        let target = f_max(split.n() as u64, k as u64)?.value;
        let edge_count = graph.edge_count();
        Ok(ConstructionReport {
            graph,
            split,
            edge_count,
            target,
            meets_target: edge_count as u64 == target,
            variant,
            gadgets_a,
            gadgets_b,
        })
    }

    /// Degrees inside one side, in label order.
    pub fn side_degrees(&self, side: Side) -> Vec<usize> {
        let range = match side {
            Side::A => 0..self.split.n0,
            Side::B => self.split.n0..self.split.n(),
        };
        range
            .clone()
            .map(|v| self.graph.neighbors(v).filter(|w| range.contains(w)).count())
            .collect()
    }
}

fn split_for(n: usize, k: usize) -> Result<SplitSpec, ConstructError> {
    let n0 = construction_n0(n as u64, k as u64) as usize;
    if n0 > n {
        return Err(ConstructError::TooSmall { n, min: k.div_ceil(2) });
    }
    Ok(SplitSpec::new(n0, n - n0))
}

fn host_with(split: SplitSpec, a: Option<&Graph>, b: Option<&Graph>) -> Result<Graph, ConstructError> {
    let mut g = complete_bipartite(split.n0, split.n1);
    if let Some(a) = a {
        g = embed_into_side(&g, split, a, Side::A)?;
    }
    if let Some(b) = b {
        g = embed_into_side(&g, split, b, Side::B)?;
    }
    Ok(g)
}

/// `n0 = floor((2n+k)/4)` split into copies of `K_{k-1,k-1}` in side A.
pub fn construct_prop4(n: usize, t: &Tree) -> Result<ConstructionReport, ConstructError> {
    t.require_balanced()?;
    let k = t.k();
    if k < 2 {
        return Err(ConstructError::NotApplicable("k must be at least 2".into()));
    }
    let split = split_for(n, k)?;
    let modulus = 2 * (k - 1);
    if split.n0 % modulus != 0 {
        return Err(ConstructError::DivisibilityFailed { n0: split.n0, modulus });
    }
    let block = complete_bipartite(k - 1, k - 1);
    let copies = split.n0 / modulus;
    let parts = vec![&block; copies];
    let a = disjoint_union(&parts);
    let g = host_with(split, Some(&a), None)?;
    ConstructionReport::new(g, split, k, Variant::Prop4, vec![modulus; copies], Vec::new())
}

/// Copies of `K_{k-1,k-1}` in side A, with `t = (n0 mod 2(k-1))/2` of them
/// swapped for `K_{k,k}` minus a perfect matching to use up the remainder.
/// Only for trees on exactly `2k+1` vertices.
pub fn construct_prop5(n: usize, t: &Tree) -> Result<ConstructionReport, ConstructError> {
    t.require_balanced()?;
    let k = t.k();
    if t.n() != 2 * k + 1 {
        return Err(ConstructError::WrongOrder {
            order: t.n(),
            expected: 2 * k + 1,
        });
    }
    if k < 2 {
        return Err(ConstructError::NotApplicable("k must be at least 2".into()));
    }
    let split = split_for(n, k)?;
    if split.n0 % 2 == 1 {
        return Err(ConstructError::ParityFailed { n0: split.n0 });
    }
    let modulus = 2 * (k - 1);
    let blocks = split.n0 / modulus;
    let swaps = (split.n0 % modulus) / 2;
    if blocks < swaps {
        return Err(ConstructError::TooFewBlocks { blocks, needed: swaps });
    }
    let plain = complete_bipartite(k - 1, k - 1);
    let swapped = crown(k);
    let mut parts = vec![&swapped; swaps];
    parts.extend(std::iter::repeat_n(&plain, blocks - swaps));
    let sizes = parts.iter().map(|g| g.n()).collect();
    let a = disjoint_union(&parts);
    let g = host_with(split, Some(&a), None)?;
    ConstructionReport::new(g, split, k, Variant::Prop5, sizes, Vec::new())
}

/// Near-regular blocks of degree `k - 1` on at most `2k - 1` vertices in
/// side A. Needs a matching of the tree saturating its smaller class.
pub fn construct_prop6(n: usize, t: &Tree) -> Result<ConstructionReport, ConstructError> {
    t.require_balanced()?;
    let k = t.k();
    if !has_matching_covering_small_class(t) {
        return Err(ConstructError::NoSaturatingMatching);
    }
    if n < 2 * k {
        return Err(ConstructError::TooSmall { n, min: 2 * k });
    }
    let split = split_for(n, k)?;
    let (a, sizes) = regular_blocks(split.n0, k);
    let g = host_with(split, Some(&a), None)?;
    ConstructionReport::new(g, split, k, Variant::Prop6, sizes, Vec::new())
}

/// The extra constructions for `k` in `{2, 3, 4}`:
///
/// * `k = 2`, `n1 = n0 - 1` even: a perfect matching in the smaller side B.
/// * `k = 3`, `n0 = n1` even, tree not a double-matching exception: a
///   perfect matching in each side.
/// * `k = 4`, `n1 = n0 - 1` even, tree in the two-regular list: short
///   cycles in side A (see [`short_cycles`]; triangle-free for the first
///   three listed trees) and a perfect matching in side B. For several
///   listed trees no 2-regular side avoids the suspension at small `n`, so
///   the checker in [`best_construction`] decides.
pub fn construct_case2_exceptional(n: usize, t: &Tree) -> Result<ConstructionReport, ConstructError> {
    t.require_balanced()?;
    let k = t.k();
    let na = |m: String| ConstructError::NotApplicable(m);
    match k {
        2 => {
            if n % 4 != 1 {
                return Err(na(format!("k = 2 needs n1 = n0 - 1 even, i.e. n = 1 mod 4; n = {n}")));
            }
            let split = SplitSpec::new(n.div_ceil(2), n / 2);
            let b = matching_on(split.n1);
            let g = host_with(split, None, Some(&b))?;
            let sizes = vec![2; split.n1 / 2];
            ConstructionReport::new(g, split, k, Variant::SmallSideMatching, Vec::new(), sizes)
        }
        3 => {
            if is_double_matching_exception(t) {
                return Err(na("tree is a double-matching exception".into()));
            }
            if !n.is_multiple_of(4) || n == 0 {
                return Err(na(format!("k = 3 needs n0 = n1 even, i.e. n = 0 mod 4; n = {n}")));
            }
            let split = SplitSpec::new(n / 2, n / 2);
            let m = matching_on(split.n0);
            let g = host_with(split, Some(&m), Some(&m))?;
            let sizes = vec![2; split.n0 / 2];
            ConstructionReport::new(g, split, k, Variant::Case2DoubleMatching, sizes.clone(), sizes)
        }
        4 => {
            if two_regular_index(t).is_none() {
                return Err(na("tree is not in the two-regular list".into()));
            }
            if n % 4 != 1 || n < 9 {
                return Err(na(format!("k = 4 needs n1 = n0 - 1 even and n >= 9; n = {n}")));
            }
            let split = SplitSpec::new(n.div_ceil(2), n / 2);
            let triangle_free = two_regular_index(t).is_some_and(|i| i < 3);
            let (a, a_sizes) = short_cycles(split.n0, triangle_free);
            let b = matching_on(split.n1);
            let g = host_with(split, Some(&a), Some(&b))?;
            let b_sizes = vec![2; split.n1 / 2];
            ConstructionReport::new(g, split, k, Variant::Case2TwoRegularMatching, a_sizes, b_sizes)
        }
        _ => Err(na(format!("k = {k} is outside 2..=4"))),
    }
}

pub fn construct_variant(variant: Variant, n: usize, t: &Tree) -> Result<ConstructionReport, ConstructError> {
    match variant {
        Variant::Prop4 => construct_prop4(n, t),
        Variant::Prop5 => construct_prop5(n, t),
        Variant::Prop6 => construct_prop6(n, t),
        _ => {
            let r = construct_case2_exceptional(n, t)?;
            if r.variant == variant {
                Ok(r)
            } else {
                Err(ConstructError::NotApplicable(format!(
                    "k = {} gives {}, not {}",
                    t.k(),
                    r.variant.name(),
                    variant.name()
                )))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub variant: &'static str,
    pub accepted: bool,
    pub reason: String,
}

/// Outcome of [`best_construction`]: the accepted report, if any, and why
/// each variant tried was accepted or rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dispatch {
    pub report: Option<ConstructionReport>,
    pub attempts: Vec<Attempt>,
}

impl Dispatch {
    pub fn none_applicable(&self) -> bool {
        self.report.is_none()
    }
}

type Builder = fn(usize, &Tree) -> Result<ConstructionReport, ConstructError>;

/// Tries Prop6, Prop4, Prop5, then the exceptional case, and returns the
/// first whose graph the suspension checker certifies free. `budget` caps
/// node expansions per certification; an exhausted budget rejects the
/// candidate.
pub fn best_construction(n: usize, t: &Tree, budget: Option<u64>) -> Result<Dispatch, ConstructError> {
    t.require_balanced()?;
    let builders: [(&'static str, Builder); 4] = [
        ("Prop6", construct_prop6),
        ("Prop4", construct_prop4),
        ("Prop5", construct_prop5),
        ("Case2", construct_case2_exceptional),
    ];
    let mut attempts = Vec::new();
    for (name, build) in builders {
        let report = match build(n, t) {
            Ok(r) => r,
            Err(e) => {
                attempts.push(Attempt {
                    variant: name,
                    accepted: false,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let name = report.variant.name();
        match contains_suspension_budgeted(&report.graph, t, budget) {
            SearchOutcome::Absent => {
                attempts.push(Attempt {
                    variant: name,
                    accepted: true,
                    reason: "certified free of the suspension".into(),
                });
                return Ok(Dispatch {
                    report: Some(report),
                    attempts,
                });
            }
            SearchOutcome::Found(_) => attempts.push(Attempt {
                variant: name,
                accepted: false,
                reason: "graph contains the suspension".into(),
            }),
            SearchOutcome::BudgetExhausted => attempts.push(Attempt {
                variant: name,
                accepted: false,
                reason: "certification budget exhausted".into(),
            }),
        }
    }
    Ok(Dispatch { report: None, attempts })
}
