//! Balanced trees that behave specially in the small exceptional cases,
//! kept as graph6 data and matched by canonical code.

use std::sync::OnceLock;

use crate::graph::{canonical_form, parse_graph6, CanonicalCode};
use crate::tree::{certify_tree, Tree};

const DATA: &str = include_str!("../../data/exceptional_trees.txt");

struct Lists {
    double_matching: Vec<Tree>,
    two_regular: Vec<Tree>,
    double_matching_codes: Vec<CanonicalCode>,
    two_regular_codes: Vec<CanonicalCode>,
}

fn lists() -> &'static Lists {
    static CELL: OnceLock<Lists> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut double_matching = Vec::new();
        let mut two_regular = Vec::new();
        for line in DATA.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (tag, g6) = line.split_once(' ').expect("data line is `tag graph6`");
            let g = parse_graph6(g6.as_bytes()).expect("data is valid graph6");
            let t = certify_tree(&g).expect("data holds trees");
            match tag {
                "double-matching" => double_matching.push(t),
                "two-regular" => two_regular.push(t),
                other => panic!("unknown tag {other}"),
            }
        }
        let codes = |ts: &[Tree]| ts.iter().map(|t| canonical_form(t.graph()).expect("small")).collect();
        Lists {
            double_matching_codes: codes(&double_matching),
            two_regular_codes: codes(&two_regular),
            double_matching,
            two_regular,
        }
    })
}

/// The three `k = 3` trees for which a matching in each side of `K_{m,m}`
/// still leaves a copy of the suspension.
pub fn double_matching_exceptions() -> &'static [Tree] {
    &lists().double_matching
}

/// The nine `k = 4` trees that admit the extra extremal graph with a
/// 2-regular side and a matching. The first three need the 2-regular side
/// triangle-free.
pub fn two_regular_trees() -> &'static [Tree] {
    &lists().two_regular
}

fn position(codes: &[CanonicalCode], t: &Tree) -> Option<usize> {
    if t.n() > 9 {
        return None;
    }
    let code = canonical_form(t.graph()).ok()?;
    codes.iter().position(|c| *c == code)
}

pub fn is_double_matching_exception(t: &Tree) -> bool {
    position(&lists().double_matching_codes, t).is_some()
}

/// Index of `t` in [`two_regular_trees`], up to isomorphism.
pub fn two_regular_index(t: &Tree) -> Option<usize> {
    position(&lists().two_regular_codes, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn list_sizes() {
        assert_eq!(double_matching_exceptions().len(), 3);
        assert_eq!(two_regular_trees().len(), 9);
        assert!(double_matching_exceptions()
            .iter()
            .all(|t| t.k() == 3 && t.is_balanced()));
        assert!(two_regular_trees().iter().all(|t| t.k() == 4 && t.is_balanced()));
        assert_eq!(two_regular_index(&certify_tree(&path(9)).unwrap()), Some(7));
        assert!(!is_double_matching_exception(&certify_tree(&path(6)).unwrap()));
    }
}
