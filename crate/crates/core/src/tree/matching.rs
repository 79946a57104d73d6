use super::{Tree, TreeError};
use crate::graph::Graph;

fn split_sides(g: &Graph, side_a: &[usize]) -> Result<Vec<bool>, TreeError> {
    let mut in_a = vec![false; g.n()];
    for &v in side_a {
        in_a[v] = true;
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| in_a[u] == in_a[v]) {
        return Err(TreeError::NotBipartite(u, v));
    }
    Ok(in_a)
}

/// Maximum matching of a bipartite graph by repeated augmenting-path search
/// from every side-A vertex. Edges are returned as `(a, b)` with `a` in
/// side A, sorted by `a`. When the loop ends no augmenting path exists,
/// which certifies maximality.
pub fn max_matching(g: &Graph, side_a: &[usize]) -> Result<Vec<(usize, usize)>, TreeError> {
    let in_a = split_sides(g, side_a)?;
    let n = g.n();
    let mut mate = vec![usize::MAX; n];

    fn augment(g: &Graph, a: usize, mate: &mut [usize], visited: &mut [bool]) -> bool {
        for b in g.neighbors(a) {
            if visited[b] {
                continue;
            }
            visited[b] = true;
            if mate[b] == usize::MAX || augment(g, mate[b], mate, visited) {
                mate[b] = a;
                mate[a] = b;
                return true;
            }
        }
        false
    }

    let mut a_vertices: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    a_vertices.sort_unstable();
    for &a in &a_vertices {
        let mut visited = vec![false; n];
        augment(g, a, &mut mate, &mut visited);
    }
    Ok(a_vertices
        .into_iter()
        .filter(|&a| mate[a] != usize::MAX)
        .map(|a| (a, mate[a]))
        .collect())
}

/// König's construction: let `Z` be the vertices reachable from unmatched
/// side-A vertices along alternating paths (non-matching edges A to B,
/// matching edges B to A). Then `(A \ Z) ∪ (B ∩ Z)` is a vertex cover with
/// one vertex per matching edge.
pub fn konig_cover(g: &Graph, side_a: &[usize], matching: &[(usize, usize)]) -> Result<Vec<usize>, TreeError> {
    let in_a = split_sides(g, side_a)?;
    let n = g.n();
    let mut mate = vec![usize::MAX; n];
    for &(a, b) in matching {
        mate[a] = b;
        mate[b] = a;
    }
    let mut reached = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| in_a[v] && mate[v] == usize::MAX).collect();
    for &v in &stack {
        reached[v] = true;
    }
    while let Some(a) = stack.pop() {
        for b in g.neighbors(a) {
            if reached[b] || mate[a] == b {
                continue;
            }
            reached[b] = true;
            let next = mate[b];
            if next != usize::MAX && !reached[next] {
                reached[next] = true;
                stack.push(next);
            }
        }
    }
    Ok((0..n).filter(|&v| in_a[v] != reached[v]).collect())
}

/// Whether some matching saturates the smaller colour class, i.e. `ν(T) = k`.
pub fn has_matching_covering_small_class(t: &Tree) -> bool {
    max_matching(t.graph(), t.class_a())
        .map(|m| m.len() == t.k())
        .unwrap_or(false)
}
