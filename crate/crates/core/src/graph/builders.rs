use serde::Serialize;

use super::{Graph, GraphError};
use crate::formula::SplitSpec;

/// One side of a bipartition built by [`complete_bipartite`]; `A` holds the
/// first `n0` labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{n0,n1}` with side A on `0..n0` and side B on `n0..n0+n1`.
pub fn complete_bipartite(n0: usize, n1: usize) -> Graph {
    let mut g = Graph::empty(n0 + n1);
    for u in 0..n0 {
        for v in n0..n0 + n1 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for v in 1..=k {
        g.add_edge(0, v);
    }
    g
}

/// `pairs` disjoint edges `(0,1), (2,3), ...` on `n` vertices.
pub fn matching_graph(n: usize, pairs: usize) -> Graph {
    assert!(2 * pairs <= n, "matching does not fit");
    let mut g = Graph::empty(n);
    for i in 0..pairs {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Circulant graph on `n` vertices: `i ~ i ± d (mod n)` for every `d` in `offsets`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for &d in offsets {
            let j = (i + d) % n;
            if j != i {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// Adds a new vertex `n` adjacent to every vertex of `g`.
pub fn suspension(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for v in 0..n {
        out.add_edge(v, n);
    }
    out
}

/// Disjoint union; the parts keep their order and are relabelled consecutively.
pub fn disjoint_union(parts: &[&Graph]) -> Graph {
    let total = parts.iter().map(|g| g.n()).sum();
    let mut out = Graph::empty(total);
    let mut offset = 0;
    for g in parts {
        for (u, v) in g.edges() {
            out.add_edge(offset + u, offset + v);
        }
        offset += g.n();
    }
    out
}

/// Places `patch` on the first `patch.n()` vertices of the chosen side of a
/// host laid out as `split` (side A first). Host edges are kept.
pub fn embed_into_side(host: &Graph, split: SplitSpec, patch: &Graph, side: Side) -> Result<Graph, GraphError> {
    let (offset, size) = match side {
        Side::A => (0, split.n0),
        Side::B => (split.n0, split.n1),
    };
    if patch.n() > size {
        return Err(GraphError::PatchTooLarge {
            patch: patch.n(),
            side: size,
        });
    }
    assert_eq!(host.n(), split.n(), "host does not match the split");
    let mut out = host.clone();
    for (u, v) in patch.edges() {
        out.add_edge(offset + u, offset + v);
    }
    Ok(out)
}
