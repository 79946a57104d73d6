//! Canonical labelling for small graphs.
//!
//! Individualisation-refinement: the root partition is refined to an
//! equitable ordered partition, then the first non-singleton cell is split by
//! individualising each of its vertices in turn. Every discrete leaf yields a
//! vertex order; the canonical order is the one whose adjacency code (upper
//! triangle, column-major) is largest. Two leaves with the same code define an
//! automorphism, which is used both to skip equivalent children (orbit
//! pruning) and to abandon a subtree that mirrors an explored one.

use std::fmt;

use super::{graph6, Graph, GraphError};

/// Default vertex cap for canonical forms.
pub const CANON_CAP: usize = 12;
/// The code is packed into a `u128`, so 16 vertices is a hard ceiling.
const HARD_CAP: usize = 16;

/// The graph6 string of the canonically relabelled graph. Equal codes
/// mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl serde::Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, GraphError> {
    canonical_form_with_cap(g, CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalCode, GraphError> {
    let lab = labeling_with_cap(g, cap)?;
    Ok(code_from_labeling(g, &lab))
}

/// `lab[v]` is the canonical position of vertex `v`; `g.permuted(&lab)` is
/// the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    labeling_with_cap(g, CANON_CAP)
}

fn labeling_with_cap(g: &Graph, cap: usize) -> Result<Vec<usize>, GraphError> {
    let cap = cap.min(HARD_CAP);
    if g.n() > cap {
        return Err(GraphError::SizeCapExceeded { n: g.n(), cap });
    }
    Ok(labeling_unchecked(g))
}

pub(crate) fn code_from_labeling(g: &Graph, lab: &[usize]) -> CanonicalCode {
    CanonicalCode(graph6::write_graph6(&g.permuted(lab)))
}

/// Canonical labelling for `n <= 16`.
pub(crate) fn labeling_unchecked(g: &Graph) -> Vec<usize> {
    let n = g.n();
    debug_assert!(n <= HARD_CAP);
    let mut adj = [0u16; HARD_CAP];
    for (v, row) in adj.iter_mut().enumerate().take(n) {
        *row = g.row(v)[0] as u16;
    }
    let mut search = Searcher {
        n,
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    if n == 0 {
        cells.clear();
    }
    refine(&adj, &mut cells);
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut lab = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        lab[v as usize] = pos;
    }
    lab
}

struct Leaf {
    code: u128,
    order: Vec<u8>,
    path: Vec<u8>,
}

struct Searcher {
    n: usize,
    adj: [u16; HARD_CAP],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<[u8; HARD_CAP]>,
}

impl Searcher {
    /// Explores the node reached by individualising `path`. Returns the depth
    /// to unwind to when the subtree turned out to mirror an explored one.
    fn descend(&mut self, cells: Vec<Vec<u8>>, path: &mut Vec<u8>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut tried: Vec<u8> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let orbit = self.orbits_fixing(path);
                if tried.iter().any(|&u| orbit[u as usize] == orbit[v as usize]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<u8> = child[target].iter().copied().filter(|&x| x != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(&self.adj, &mut child);
            path.push(v);
            let unwind = self.descend(child, path);
            path.pop();
            if let Some(depth) = unwind {
                if depth < path.len() {
                    return Some(depth);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<u8>], path: &[u8]) -> Option<usize> {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        let code = self.code(&order);
        let leaf = Leaf {
            code,
            order,
            path: path.to_vec(),
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                code,
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        }
        let references = [self.first.as_ref(), self.best.as_ref()];
        if let Some(reference) = references.into_iter().flatten().find(|r| r.code == code) {
            let mut gamma = [0u8; HARD_CAP];
            for (i, g) in gamma.iter_mut().enumerate() {
                *g = i as u8;
            }
            for (a, b) in reference.order.iter().zip(&leaf.order) {
                gamma[*a as usize] = *b;
            }
            let depth = reference
                .path
                .iter()
                .zip(&leaf.path)
                .position(|(a, b)| a != b)
                .expect("distinct leaves have distinct paths");
            self.generators.push(gamma);
            return Some(depth);
        }
        if self.best.as_ref().is_some_and(|b| code > b.code) {
            self.best = Some(leaf);
        }
        None
    }

    fn code(&self, order: &[u8]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.n {
            let col = order[j];
            for &row in &order[..j] {
                code = (code << 1) | (self.adj[row as usize] >> col & 1) as u128;
            }
        }
        code
    }

    /// Orbit representatives under the generators that fix `path` pointwise.
    fn orbits_fixing(&self, path: &[u8]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gamma in &self.generators {
            if path.iter().any(|&p| gamma[p as usize] != p) {
                continue;
            }
            for v in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v as usize]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..self.n as u8).map(|v| find(&mut parent, v)).collect()
    }
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// the number of neighbours in a splitter cell, smaller counts first, which
/// keeps the result a function of the graph's structure only.
fn refine(adj: &[u16; HARD_CAP], cells: &mut Vec<Vec<u8>>) {
    'again: loop {
        if cells.iter().all(|c| c.len() == 1) {
            return;
        }
        for w in 0..cells.len() {
            let mask = cells[w].iter().fold(0u16, |m, &v| m | 1 << v);
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let count = |v: u8| (adj[v as usize] & mask).count_ones();
                let c0 = count(cells[x][0]);
                if cells[x].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                let mut keyed: Vec<(u32, u8)> = cells[x].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<u8>> = Vec::new();
                let mut last = None;
                for (c, v) in keyed {
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().expect("pushed").push(v);
                }
                cells.splice(x..=x, parts);
                continue 'again;
            }
        }
        return;
    }
}
