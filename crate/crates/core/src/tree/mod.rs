//! Trees with their 2-colouring, plus the tree-side machinery: matchings and
//! König covers, coverings and the suspension family, and decompositions
//! into small components around an independent set.

mod covering;
mod decompose;
mod matching;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use covering::{enumerate_coverings, s_hat_family, Covering, SHatFamily};
pub use decompose::{
    check_decomposition, decompose_bruteforce, decompose_lemma4, smallest_separator, Decomposition,
    DecompositionViolation, BRUTEFORCE_CAP,
};
pub use matching::{has_matching_covering_small_class, konig_cover, max_matching};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not a tree: {0}")]
    NotATree(&'static str),
    #[error("tree is not balanced: colour classes have sizes {small} and {large}")]
    NotBalanced { small: usize, large: usize },
    #[error("a = {a} is outside 1..={k}")]
    BadA { a: usize, k: usize },
    #[error("graph is not bipartite with the given side: edge {0}-{1} stays inside a side")]
    NotBipartite(usize, usize),
    #[error("tree has {n} vertices, above the brute-force cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("malformed parent array: {0}")]
    MalformedParentArray(String),
    #[error("decomposition step produced an invalid result: {0}")]
    DecompositionFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph certified connected and acyclic, with its unique 2-colouring.
/// `class_a` is the smaller colour class (on a tie, the class of vertex 0),
/// so `k = |class_a|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
}

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn class_a(&self) -> &[usize] {
        &self.class_a
    }

    pub fn class_b(&self) -> &[usize] {
        &self.class_b
    }

    /// Size of the smaller colour class.
    pub fn k(&self) -> usize {
        self.class_a.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.class_b.len() - self.class_a.len() <= 1
    }

    pub(crate) fn require_balanced(&self) -> Result<(), TreeError> {
        if self.is_balanced() {
            Ok(())
        } else {
            Err(TreeError::NotBalanced {
                small: self.class_a.len(),
                large: self.class_b.len(),
            })
        }
    }

    /// Colour of `v`: `true` for class A.
    pub fn in_class_a(&self, v: usize) -> bool {
        self.class_a.binary_search(&v).is_ok()
    }

    /// Parent array rooted at 0 (`-1` for the root), breadth-first.
    pub fn to_parent_array(&self) -> Vec<i64> {
        let n = self.n();
        let mut parent = vec![-1i64; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for w in self.graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u as i64;
                    queue.push_back(w);
                }
            }
        }
        parent
    }
}

/// Certifies `g` as a tree and computes its breadth-first 2-colouring.
pub fn certify_tree(g: &Graph) -> Result<Tree, TreeError> {
    let n = g.n();
    if n == 0 {
        return Err(TreeError::NotATree("no vertices"));
    }
    if g.edge_count() != n - 1 {
        return Err(TreeError::NotATree("edge count is not n - 1"));
    }
    let mut colour = vec![u8::MAX; n];
    colour[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[u];
                queue.push_back(w);
            }
        }
    }
    if colour.contains(&u8::MAX) {
        return Err(TreeError::NotATree("disconnected"));
    }
    let zero: Vec<usize> = (0..n).filter(|&v| colour[v] == 0).collect();
    let one: Vec<usize> = (0..n).filter(|&v| colour[v] == 1).collect();
    let (class_a, class_b) = if one.len() < zero.len() {
        (one, zero)
    } else {
        (zero, one)
    };
    Ok(Tree {
        graph: g.clone(),
        class_a,
        class_b,
    })
}

/// Parses `p0 p1 ... p_{n-1}` where `p_v` is the parent of `v` and the
/// root has parent `-1`.
pub fn parse_parent_array(text: &str) -> Result<Tree, TreeError> {
    let bad = |m: String| TreeError::MalformedParentArray(m);
    let parents: Vec<i64> = text
        .split_whitespace()
        .map(|tok| tok.parse::<i64>().map_err(|_| bad(format!("bad token `{tok}`"))))
        .collect::<Result<_, _>>()?;
    let n = parents.len();
    if n == 0 {
        return Err(bad("empty parent array".into()));
    }
    let roots = parents.iter().filter(|&&p| p == -1).count();
    if roots != 1 {
        return Err(bad(format!("expected exactly one root, found {roots}")));
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (v, &p) in parents.iter().enumerate() {
        if p == -1 {
            continue;
        }
        if p < 0 || p as usize >= n {
            return Err(bad(format!("parent {p} of vertex {v} out of range")));
        }
        edges.push((v, p as usize));
    }
    let g = Graph::from_edges(n, edges).map_err(|e| bad(e.to_string()))?;
    certify_tree(&g)
}

/// Relabels the subtree left after deleting `removed` (and adding `extra`
/// edges, given in original labels) onto `0..m` in increasing label order.
/// Returns the new tree and the map new label -> old label.
pub(crate) fn reduced_tree(
    t: &Tree,
    removed: &[usize],
    extra: &[(usize, usize)],
) -> Result<(Tree, Vec<usize>), TreeError> {
    let keep: Vec<usize> = (0..t.n()).filter(|v| !removed.contains(v)).collect();
    let mut new_label = vec![usize::MAX; t.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_label[v] = i;
    }
    let mut g = t.graph.induced_subgraph(&keep);
    for &(u, v) in extra {
        g.add_edge(new_label[u], new_label[v]);
    }
    Ok((certify_tree(&g)?, keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, star};

    #[test]
    fn certify_examples() {
        let p4 = certify_tree(&path(4)).unwrap();
        assert!(p4.is_balanced());
        assert_eq!(p4.k(), 2);

        let s = certify_tree(&star(3)).unwrap();
        assert_eq!((s.class_a().len(), s.class_b().len(), s.k()), (1, 3, 1));
        assert!(!s.is_balanced());

        assert!(matches!(certify_tree(&cycle(4)), Err(TreeError::NotATree(_))));
        let forest = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(certify_tree(&forest), Err(TreeError::NotATree(_))));
    }

    #[test]
    fn parent_array_round_trip() {
        let t = parse_parent_array("-1 0 1 2").unwrap();
        assert_eq!(t.graph(), &path(4));
        let again = t.to_parent_array();
        assert_eq!(again, vec![-1, 0, 1, 2]);
        assert!(parse_parent_array("-1 -1").is_err());
        assert!(parse_parent_array("-1 5").is_err());
        assert!(parse_parent_array("1 0").is_err());
        assert!(parse_parent_array("-1 x").is_err());
    }
}
