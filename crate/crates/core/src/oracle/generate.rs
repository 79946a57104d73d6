//! Isomorph-free generation by canonical augmentation, edge by edge.
//!
//! A child `H = G + e` is kept only when `e` is a canonical last edge of `H`:
//! among the edges of `H` with the largest sorted endpoint-degree pair, the
//! one whose endpoints come last in the canonical labelling of `H`. When
//! several edges tie for that key, `H - e*` is compared with `G` by
//! canonical code. Each isomorphism class then has exactly one parent class,
//! and the few isomorphic siblings from one parent are dropped by code.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::canon::{code_from_labeling, labeling_unchecked};
use crate::graph::{CanonicalCode, Graph};

/// A graph together with its canonical code.
pub type Node = (Graph, CanonicalCode);

/// Generation restricted to a property closed under edge deletion.
pub struct Generator<'a> {
    n: usize,
    keep: &'a (dyn Fn(&Graph) -> bool + Sync),
}

fn edge_key(g: &Graph, u: usize, v: usize) -> (usize, usize) {
    let (a, b) = (g.degree(u), g.degree(v));
    (a.max(b), a.min(b))
}

impl<'a> Generator<'a> {
    /// `keep` must hold for the edgeless graph and be closed under edge
    /// deletion; otherwise parts of the class space are unreachable.
    /// Panics when `n > 16`; callers enforce their own smaller caps.
    pub fn new(n: usize, keep: &'a (dyn Fn(&Graph) -> bool + Sync)) -> Generator<'a> {
        assert!(n <= 16, "canonical labelling is limited to 16 vertices");
        Generator { n, keep }
    }

    pub fn root(&self) -> Node {
        let g = Graph::empty(self.n);
        let code = code_from_labeling(&g, &labeling_unchecked(&g));
        (g, code)
    }

    /// Canonical children of `g` satisfying `keep`, sorted by code.
    pub fn children(&self, node: &Node) -> Vec<Node> {
        let (g, g_code) = node;
        let n = self.n;
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let h = g.with_edge(u, v);
                let key = edge_key(&h, u, v);
                let edges = h.edges();
                let best = edges
                    .iter()
                    .map(|&(a, b)| edge_key(&h, a, b))
                    .max()
                    .expect("h has an edge");
                if key < best {
                    continue;
                }
                if !(self.keep)(&h) {
                    continue;
                }
                let lab = labeling_unchecked(&h);
                let tied: Vec<(usize, usize)> =
                    edges.into_iter().filter(|&(a, b)| edge_key(&h, a, b) == best).collect();
                if tied.len() > 1 {
                    let rank = |&(a, b): &(usize, usize)| {
                        let (x, y) = (lab[a], lab[b]);
                        (x.max(y), x.min(y))
                    };
                    let last = *tied.iter().max_by_key(|e| rank(e)).expect("nonempty");
                    if last != (u, v) {
                        let parent = h.without_edge(last.0, last.1);
                        let p_code = code_from_labeling(&parent, &labeling_unchecked(&parent));
                        if p_code != *g_code {
                            continue;
                        }
                    }
                }
                let code = code_from_labeling(&h, &lab);
                if seen.insert(code.clone()) {
                    out.push((h, code));
                }
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }

    /// Depth-first walk below `node` (the node itself included), in a
    /// deterministic order.
    pub fn walk(&self, node: &Node, visit: &mut dyn FnMut(&Node)) {
        visit(node);
        for child in self.children(node) {
            self.walk(&child, visit);
        }
    }

    /// Every node with exactly `depth` edges, plus every node above that depth
    /// (which has fewer edges), in level order.
    pub fn levels(&self, depth: usize) -> (Vec<Node>, Vec<Node>) {
        let mut shallow = Vec::new();
        let mut frontier = vec![self.root()];
        for _ in 0..depth {
            let next: Vec<Node> = frontier.par_iter().flat_map_iter(|node| self.children(node)).collect();
            shallow.append(&mut frontier);
            frontier = next;
        }
        (frontier, shallow)
    }

    /// Runs `shard` on every subtree rooted at `depth` edges, in parallel,
    /// and returns the nodes above that depth together with the shard
    /// results in shard order.
    pub fn sharded<T: Send>(&self, depth: usize, shard: &(dyn Fn(&Node) -> T + Sync)) -> (Vec<Node>, Vec<T>) {
        let (roots, shallow) = self.levels(depth);
        let results = roots.par_iter().map(shard).collect();
        (shallow, results)
    }
}
