use serde::Serialize;

use super::{Tree, TreeError};
use crate::family::GraphFamily;
use crate::graph::{suspension, Graph};

/// A vertex set `S` with `T - S` edgeless.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Covering {
    pub vertices: Vec<usize>,
    /// `S` is itself independent in `T`.
    pub independent: bool,
}

/// Calls `visit` on every subset of `0..n` of size `<= bound`, by size and
/// then lexicographically.
pub(crate) fn for_each_subset(n: usize, bound: usize, mut visit: impl FnMut(&[usize])) {
    for size in 0..=bound.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            visit(&subset);
            // Rightmost position that can still move right.
            let Some(i) = (0..size).rev().find(|&i| subset[i] < n - size + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
}

/// All coverings of size at most `bound`, by size then lexicographically.
pub fn enumerate_coverings(t: &Tree, bound: usize) -> Vec<Covering> {
    let g = t.graph();
    let edges = g.edges();
    let mut out = Vec::new();
    let mut member = vec![false; g.n()];
    for_each_subset(g.n(), bound, |s| {
        for &v in s {
            member[v] = true;
        }
        if edges.iter().all(|&(u, v)| member[u] || member[v]) {
            let independent = edges.iter().all(|&(u, v)| !(member[u] && member[v]));
            out.push(Covering {
                vertices: s.to_vec(),
                independent,
            });
        }
        for &v in s {
            member[v] = false;
        }
    });
    out
}

/// The suspensions of `T[S]` over coverings with `|S| <= k`, together with
/// `T` itself, and the minimal elements of that family under the subgraph
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SHatFamily {
    pub raw: GraphFamily,
    pub minimal: GraphFamily,
}

pub fn s_hat_family(t: &Tree) -> Result<SHatFamily, TreeError> {
    let mut raw = GraphFamily::new();
    for covering in enumerate_coverings(t, t.k()) {
        let induced: Graph = t.graph().induced_subgraph(&covering.vertices);
        raw.insert(&suspension(&induced))?;
    }
    raw.insert(t.graph())?;
    let minimal = raw.minimal_elements();
    Ok(SHatFamily { raw, minimal })
}
