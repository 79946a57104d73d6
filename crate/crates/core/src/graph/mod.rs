//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one bit row per vertex, so neighbourhood
//! intersections in the search code are word operations.

pub(crate) mod bits;
mod builders;
pub(crate) mod canon;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use builders::{
    circulant, complete, complete_bipartite, cycle, disjoint_union, embed_into_side, empty, matching_graph, path,
    petersen, star, suspension, Side,
};
pub use canon::{canonical_form, canonical_form_with_cap, canonical_labeling, CanonicalCode, CANON_CAP};
pub use graph6::{parse_graph6, write_graph6, MAX_SHORT_N};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("patch on {patch} vertices does not fit a side of {side} vertices")]
    PatchTooLarge { patch: usize, side: usize },
    #[error("graph has {n} vertices, above the supported cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// A finite simple undirected graph. Values are immutable once built;
/// every "modifying" operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let stride = bits::words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; stride * n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let s = self.stride;
        bits::set(&mut self.rows[u * s..(u + 1) * s], v);
        bits::set(&mut self.rows[v * s..(v + 1) * s], u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        let s = self.stride;
        bits::clear(&mut self.rows[u * s..(u + 1) * s], v);
        bits::clear(&mut self.rows[v * s..(v + 1) * s], u);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.rows) / 2
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    /// Neighbours of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::Ones::new(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    /// Returns a copy with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// The subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn has_triangle(&self) -> bool {
        let mut scratch = vec![0u64; self.stride];
        for (u, v) in self.edges() {
            for (w, (a, b)) in scratch.iter_mut().zip(self.row(u).iter().zip(self.row(v))) {
                *w = a & b;
            }
            if scratch.iter().any(|&w| w != 0) {
                return true;
            }
        }
        false
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_avoiding(self, &[])
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Plain-text edge list: a header line `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let bad = |msg: &str| GraphError::MalformedEdgeList(msg.to_string());
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("missing header"))?;
        let (n, m) = parse_pair(header).ok_or_else(|| bad("header must be `n m`"))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line).ok_or_else(|| bad(&format!("bad edge line `{line}`")))?);
        }
        if edges.len() != m {
            return Err(bad(&format!("header promises {m} edges, found {}", edges.len())));
        }
        let g =
            Graph::from_edges(n, edges.iter().copied()).map_err(|e| GraphError::MalformedEdgeList(e.to_string()))?;
        if g.edge_count() != m {
            return Err(bad("duplicate edges"));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    let a = it.next()?.ok()?;
    let b = it.next()?.ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Components of `g - removed`, each sorted, ordered by smallest vertex.
pub(crate) fn components_avoiding(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An injective vertex map witnessing `pattern ⊆ host`: pattern vertex `i`
/// goes to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and edge preservation directly against both graphs.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        pattern
            .edges()
            .into_iter()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}
