//! Independent sets whose removal leaves only small components.
//!
//! For a balanced tree with smaller colour class of size `k` and any
//! `a` in `1..=k`, there is an independent set `I` with `|I| <= a` such that
//! every component of `T - I` has at most `k - a + 1` vertices.
//! [`decompose_lemma4`] builds such a set by the inductive construction on
//! `(k, a)`; [`decompose_bruteforce`] finds the smallest one exhaustively and
//! serves as its oracle.

use serde::Serialize;
use thiserror::Error;

use super::covering::for_each_subset;
use super::{reduced_tree, Tree, TreeError};
use crate::graph::components_avoiding;

/// Largest tree [`decompose_bruteforce`] accepts.
pub const BRUTEFORCE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    /// Sorted.
    pub independent_set: Vec<usize>,
    /// Components of `T - I`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl Decomposition {
    fn from_set(t: &Tree, mut set: Vec<usize>) -> Decomposition {
        set.sort_unstable();
        set.dedup();
        let components = components_avoiding(t.graph(), &set);
        Decomposition {
            independent_set: set,
            components,
        }
    }

    pub fn largest_component(&self) -> usize {
        self.components.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    #[error("vertices {0} and {1} of the set are adjacent")]
    NotIndependent(usize, usize),
    #[error("set has {size} vertices, more than a = {a}")]
    SetTooLarge { size: usize, a: usize },
    #[error("a component has {size} vertices, above the bound {bound}")]
    ComponentTooLarge { size: usize, bound: usize },
    #[error("components are not those of T - I")]
    WrongComponents,
}

/// Checks the three decomposition invariants independently of how `d` was built.
pub fn check_decomposition(t: &Tree, a: usize, d: &Decomposition) -> Result<(), DecompositionViolation> {
    let g = t.graph();
    for (i, &u) in d.independent_set.iter().enumerate() {
        for &v in &d.independent_set[i + 1..] {
            if g.has_edge(u, v) {
                return Err(DecompositionViolation::NotIndependent(u, v));
            }
        }
    }
    if d.independent_set.len() > a {
        return Err(DecompositionViolation::SetTooLarge {
            size: d.independent_set.len(),
            a,
        });
    }
    let mut set = d.independent_set.clone();
    set.sort_unstable();
    set.dedup();
    if set.len() != d.independent_set.len()
        || set.iter().any(|&v| v >= g.n())
        || components_avoiding(g, &set) != d.components
    {
        return Err(DecompositionViolation::WrongComponents);
    }
    let bound = (t.k() + 1).saturating_sub(a);
    if let Some(size) = d.components.iter().map(Vec::len).find(|&s| s > bound) {
        return Err(DecompositionViolation::ComponentTooLarge { size, bound });
    }
    Ok(())
}

fn guard(t: &Tree, a: usize) -> Result<(), TreeError> {
    t.require_balanced()?;
    if a < 1 || a > t.k() {
        return Err(TreeError::BadA { a, k: t.k() });
    }
    Ok(())
}

/// The first independent set of size `<= max_size` (by size, then
/// lexicographically) whose removal leaves components of at most
/// `component_bound` vertices.
pub fn smallest_separator(t: &Tree, max_size: usize, component_bound: usize) -> Result<Option<Vec<usize>>, TreeError> {
    let n = t.n();
    if n > BRUTEFORCE_CAP {
        return Err(TreeError::SizeCapExceeded { n, cap: BRUTEFORCE_CAP });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| t.graph().neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut found = None;
    for_each_subset(n, max_size, |s| {
        if found.is_some() {
            return;
        }
        let mask = s.iter().fold(0u32, |m, &v| m | 1 << v);
        if s.iter().any(|&v| adj[v] & mask != 0) {
            return;
        }
        let mut rest = full & !mask;
        while rest != 0 {
            let start = rest.trailing_zeros();
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & rest & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            if comp.count_ones() as usize > component_bound {
                return;
            }
            rest &= !comp;
        }
        found = Some(s.to_vec());
    });
    Ok(found)
}

/// Exhaustive oracle: the smallest valid set, or `None` when infeasible.
pub fn decompose_bruteforce(t: &Tree, a: usize) -> Result<Option<Decomposition>, TreeError> {
    guard(t, a)?;
    let bound = t.k() - a + 1;
    Ok(smallest_separator(t, a, bound)?.map(|set| Decomposition::from_set(t, set)))
}

/// Inductive construction on `(k, a)`.
///
/// * `k <= 2`: the trees are tiny (4 or 5 vertices); the smallest valid set
///   is found exhaustively.
/// * `a = 1`: delete a leaf `x` of class A and a leaf `y` of class B (or,
///   when A has no leaf, a leaf `y` of B with its degree-2 neighbour `x`),
///   solve the smaller tree, then put `x, y` back. The vertex `w` found for
///   the smaller tree still works unless `x, y` both join one component
///   that already had `k - 1` vertices; then the neighbour of `w` inside
///   that component works instead.
/// * `a >= 2`: take `x` whose neighbours are all leaves except one, `y`.
///   Delete `x` and one leaf `x_t`, hang the other leaves of `x` on a
///   neighbour `x'` of `y`, and solve for `a - 1`. If `y` is not in the
///   returned set, add `x` and drop the re-hung leaves; otherwise add `x_t`.
///
/// Whenever a choice is free the smallest label wins, and the leaf-pair
/// branch is preferred in the `a = 1` step.
pub fn decompose_lemma4(t: &Tree, a: usize) -> Result<Decomposition, TreeError> {
    guard(t, a)?;
    let set = construct(t, a)?;
    Ok(Decomposition::from_set(t, set))
}

fn construct(t: &Tree, a: usize) -> Result<Vec<usize>, TreeError> {
    let fail = |msg: String| TreeError::DecompositionFailed(msg);
    guard(t, a).map_err(|e| fail(format!("reduced tree violates the preconditions: {e}")))?;
    let k = t.k();
    let set = if k <= 2 {
        smallest_separator(t, a, k - a + 1)?
            .ok_or_else(|| fail(format!("no valid set for a base tree with k = {k}, a = {a}")))?
    } else if a == 1 {
        single_vertex_step(t)?
    } else {
        reduction_step(t, a)?
    };
    let d = Decomposition::from_set(t, set.clone());
    check_decomposition(t, a, &d).map_err(|v| fail(format!("k = {k}, a = {a}: {v}")))?;
    Ok(d.independent_set)
}

fn is_leaf(t: &Tree, v: usize) -> bool {
    t.graph().degree(v) == 1
}

fn single_vertex_step(t: &Tree) -> Result<Vec<usize>, TreeError> {
    let g = t.graph();
    let k = t.k();
    let leaf_a = t.class_a().iter().copied().find(|&v| is_leaf(t, v));
    let leaf_b = t.class_b().iter().copied().find(|&v| is_leaf(t, v));
    let (x, y) = match (leaf_a, leaf_b) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            // No leaf in A: then |B| = k + 1 and every A vertex has degree 2.
            let x = t
                .class_a()
                .iter()
                .copied()
                .find(|&x| g.degree(x) == 2 && g.neighbors(x).any(|w| is_leaf(t, w)))
                .ok_or_else(|| TreeError::DecompositionFailed("no deletable leaf pair".into()))?;
            let y = g.neighbors(x).find(|&w| is_leaf(t, w)).expect("checked above");
            (x, y)
        }
    };
    let (smaller, keep) = reduced_tree(t, &[x, y], &[])?;
    let inner = construct(&smaller, 1)?;
    let &[w] = inner.as_slice() else {
        return Err(TreeError::DecompositionFailed(format!(
            "expected one vertex from the reduced tree, got {inner:?}"
        )));
    };
    let w = keep[w];
    let components = components_avoiding(g, &[w]);
    let home = |v: usize| components.iter().position(|c| c.contains(&v)).expect("v is not w");
    let (cx, cy) = (home(x), home(y));
    if cx == cy && components[cx].len() > k {
        // x and y joined the same component, which had k - 1 vertices.
        let w2 = g
            .neighbors(w)
            .find(|u| components[cx].contains(u))
            .expect("w is adjacent to each component of T - w");
        return Ok(vec![w2]);
    }
    Ok(vec![w])
}

fn reduction_step(t: &Tree, a: usize) -> Result<Vec<usize>, TreeError> {
    let g = t.graph();
    let (x, y) = (0..t.n())
        .filter(|&v| g.degree(v) >= 2)
        .find_map(|v| {
            let mut inner = g.neighbors(v).filter(|&w| !is_leaf(t, w));
            match (inner.next(), inner.next()) {
                (Some(y), None) => Some((v, y)),
                _ => None,
            }
        })
        .ok_or_else(|| TreeError::DecompositionFailed("no vertex with a single non-leaf neighbour".into()))?;
    let leaves: Vec<usize> = g.neighbors(x).filter(|&w| is_leaf(t, w)).collect();
    let (x_t, rehung) = leaves
        .split_first()
        .expect("x has degree >= 2 and one non-leaf neighbour");
    let x_prime = g.neighbors(y).find(|&w| w != x).expect("y is not a leaf");
    let extra: Vec<(usize, usize)> = rehung.iter().map(|&l| (x_prime, l)).collect();
    let (smaller, keep) = reduced_tree(t, &[x, *x_t], &extra)?;
    let inner: Vec<usize> = construct(&smaller, a - 1)?.into_iter().map(|v| keep[v]).collect();
    let mut set = if inner.contains(&y) {
        // x' is outside the set; the star on x and its re-hung leaves that
        // sat in x''s component stays small.
        let mut s = inner;
        s.push(*x_t);
        s
    } else {
        let mut s: Vec<usize> = inner.into_iter().filter(|v| !rehung.contains(v)).collect();
        s.push(x);
        s
    };
    set.sort_unstable();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star, Graph};
    use crate::tree::certify_tree;

    #[test]
    fn p4_single_vertex() {
        let t = certify_tree(&path(4)).unwrap();
        let d = decompose_lemma4(&t, 1).unwrap();
        assert_eq!(d.independent_set.len(), 1);
        assert!(d.independent_set == vec![1] || d.independent_set == vec![2]);
        let mut sizes: Vec<usize> = d.components.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
        assert!(decompose_bruteforce(&t, 1).unwrap().is_some());
    }

    #[test]
    fn a_equal_k_uses_singletons() {
        let t = certify_tree(&path(9)).unwrap();
        let d = decompose_lemma4(&t, t.k()).unwrap();
        assert_eq!(d.largest_component(), 1);
        check_decomposition(&t, t.k(), &d).unwrap();
    }

    #[test]
    fn guards() {
        let s = certify_tree(&star(3)).unwrap();
        assert!(matches!(decompose_lemma4(&s, 1), Err(TreeError::NotBalanced { .. })));
        assert!(matches!(
            decompose_bruteforce(&s, 1),
            Err(TreeError::NotBalanced { .. })
        ));
        let t = certify_tree(&path(4)).unwrap();
        assert_eq!(decompose_lemma4(&t, 0), Err(TreeError::BadA { a: 0, k: 2 }));
        assert_eq!(decompose_lemma4(&t, 3), Err(TreeError::BadA { a: 3, k: 2 }));
        let big = certify_tree(&path(17)).unwrap();
        assert!(matches!(
            decompose_bruteforce(&big, 1),
            Err(TreeError::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn lemma4_handles_large_paths() {
        let t = certify_tree(&path(41)).unwrap();
        for a in 1..=t.k() {
            let d = decompose_lemma4(&t, a).unwrap();
            check_decomposition(&t, a, &d).unwrap();
        }
    }

    #[test]
    fn checker_rejects_bad_sets() {
        let t = certify_tree(&path(6)).unwrap();
        let adjacent = Decomposition::from_set(&t, vec![1, 2]);
        assert!(matches!(
            check_decomposition(&t, 2, &adjacent),
            Err(DecompositionViolation::NotIndependent(1, 2))
        ));
        let too_big = Decomposition::from_set(&t, vec![0]);
        assert!(matches!(
            check_decomposition(&t, 1, &too_big),
            Err(DecompositionViolation::ComponentTooLarge { size: 5, bound: 3 })
        ));
        let mut wrong = Decomposition::from_set(&t, vec![2]);
        wrong.components.pop();
        assert_eq!(
            check_decomposition(&t, 1, &wrong),
            Err(DecompositionViolation::WrongComponents)
        );
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let k2 = certify_tree(&g).unwrap();
        check_decomposition(&k2, 1, &decompose_lemma4(&k2, 1).unwrap()).unwrap();
    }
}
