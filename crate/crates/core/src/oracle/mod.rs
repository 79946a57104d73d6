//! Exhaustive ground truth at small orders: isomorph-free enumeration,
//! brute-force extremal numbers and brute-force decomposition families.

mod cache;
mod generate;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::GraphFamily;
use crate::formula::SplitSpec;
use crate::freeness::{contains_subgraph, contains_suspension};
use crate::graph::{complete_bipartite, embed_into_side, CanonicalCode, Graph, GraphError, Side};
use crate::tree::{certify_tree, Tree, TreeError};

pub use cache::CACHE_ENV;
pub use generate::{Generator, Node};

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUM_CAP: usize = 10;
/// Largest order for [`ex_bruteforce`] without pruning.
pub const EX_CAP: usize = 9;
/// Largest order for [`ex_bruteforce`] with pruning.
pub const EX_PRUNED_CAP: usize = 10;
/// Largest tree order for [`enumerate_trees`].
pub const TREE_CAP: usize = 12;
/// Largest candidate order for [`decomposition_family_bruteforce`].
pub const FAMILY_CAP: usize = 8;
/// Subtrees rooted at this many edges are the units of parallel work.
pub const SHARD_DEPTH: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {n} exceeds the cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("the edgeless graph already contains a family member, so ex is undefined")]
    NothingFree,
    #[error("decomposition family differs between hosts K_{{{n},{n}}} and K_{{{m},{m}}}")]
    Unstable { n: usize, m: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::SizeCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by edge count and then canonical code. Representatives are the
/// canonical relabellings. `n = 10` is accepted but has over 12 million
/// classes.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    cap(n, ENUM_CAP)?;
    let all = |_: &Graph| true;
    let mut nodes = collect_all(&Generator::new(n, &all));
    nodes.sort_by(|a, b| (a.0.edge_count(), &a.1).cmp(&(b.0.edge_count(), &b.1)));
    Ok(nodes.into_iter().map(|(_, code)| code.to_graph()).collect())
}

/// Calls `visit` once per isomorphism class on `n` vertices, depth-first and
/// single-threaded.
pub fn for_each_graph(n: usize, visit: &mut dyn FnMut(&Graph, &CanonicalCode)) -> Result<(), OracleError> {
    cap(n, ENUM_CAP)?;
    let all = |_: &Graph| true;
    let g = Generator::new(n, &all);
    g.walk(&g.root(), &mut |(graph, code)| visit(graph, code));
    Ok(())
}

fn collect_all(g: &Generator) -> Vec<Node> {
    let (mut shallow, shards) = g.sharded(SHARD_DEPTH, &|root| {
        let mut out = Vec::new();
        g.walk(root, &mut |node| out.push(node.clone()));
        out
    });
    for s in shards {
        shallow.extend(s);
    }
    shallow
}

/// All trees on `n` vertices up to isomorphism, grown edge by edge through
/// forests, in canonical-code order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, OracleError> {
    cap(n, TREE_CAP)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let forest = |g: &Graph| g.edge_count() + g.components().len() == g.n();
    let generator = Generator::new(n, &forest);
    let mut trees: Vec<Node> = collect_all(&generator)
        .into_iter()
        .filter(|(g, _)| g.edge_count() == n - 1)
        .collect();
    trees.sort_by(|a, b| a.1.cmp(&b.1));
    trees
        .into_iter()
        .map(|(_, code)| Ok(certify_tree(&code.to_graph())?))
        .collect()
}

/// Balanced trees on `1..=max_n` vertices (trees on one vertex are never
/// balanced in the `k >= 1` sense and are skipped).
pub fn enumerate_balanced_trees(max_n: usize) -> Result<Vec<Tree>, OracleError> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_trees(n)?.into_iter().filter(Tree::is_balanced));
    }
    Ok(out)
}

/// `ex(n, family)` with every extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub value: usize,
    /// Canonical graph6 codes, sorted.
    pub extremal_graphs: Vec<String>,
    pub family: GraphFamily,
    /// Isomorphism classes examined.
    pub visited: u64,
}

/// Best value in one part of the search, mergeable by max and union.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Best {
    value: Option<usize>,
    graphs: BTreeSet<String>,
    visited: u64,
}

impl Best {
    fn offer(&mut self, edges: usize, code: &CanonicalCode) {
        match self.value {
            Some(v) if v > edges => {}
            Some(v) if v == edges => {
                self.graphs.insert(code.to_string());
            }
            _ => {
                self.value = Some(edges);
                self.graphs = BTreeSet::from([code.to_string()]);
            }
        }
    }

    fn merge(&mut self, other: Best) {
        self.visited += other.visited;
        match (self.value, other.value) {
            (_, None) => {}
            (Some(a), Some(b)) if a > b => {}
            (Some(a), Some(b)) if a == b => self.graphs.extend(other.graphs),
            _ => {
                self.value = other.value;
                self.graphs = other.graphs;
            }
        }
    }
}

/// Exhaustive `ex(n, family)`.
///
/// Without pruning every class on `n` vertices is tested (`n <= 9`). With
/// `prune_monotone` a graph containing a member is not extended, which is
/// sound because containment survives adding edges and the canonical parent
/// of a free graph is free (`n <= 10`).
///
/// Shards are cached on disk when the environment variable named by
/// [`CACHE_ENV`] points at a directory.
pub fn ex_bruteforce(n: usize, family: &GraphFamily, prune_monotone: bool) -> Result<ExtremalResult, OracleError> {
    cap(n, if prune_monotone { EX_PRUNED_CAP } else { EX_CAP })?;
    let free = |g: &Graph| family.is_free(g);
    let all = |_: &Graph| true;
    let generator = if prune_monotone {
        Generator::new(n, &free)
    } else {
        Generator::new(n, &all)
    };
    let root = generator.root();
    if !family.is_free(&root.0) {
        return Err(OracleError::NothingFree);
    }
    let key = cache::ShardKey::new(n, family, prune_monotone);
    let score = |node: &Node, best: &mut Best| {
        best.visited += 1;
        if prune_monotone || family.is_free(&node.0) {
            best.offer(node.0.edge_count(), &node.1);
        }
    };
    let (shallow, shards) = generator.sharded(SHARD_DEPTH, &|root: &Node| {
        if let Some(hit) = cache::load::<Best>(&key, &root.1) {
            return hit;
        }
        let mut best = Best::default();
        generator.walk(root, &mut |node| score(node, &mut best));
        cache::store(&key, &root.1, &best);
        best
    });
    let mut total = Best::default();
    for node in &shallow {
        score(node, &mut total);
    }
    for s in shards {
        total.merge(s);
    }
    Ok(ExtremalResult {
        n,
        value: total.value.expect("the edgeless graph is free"),
        extremal_graphs: total.graphs.into_iter().collect(),
        family: family.clone(),
        visited: total.visited,
    })
}

/// The minimal graphs `M` on at most `max_vertices` vertices such that
/// placing `M` in one side of `K_{N,N}`, `N = 2|T| + 2`, creates a copy of
/// the suspension of `t`. The whole computation is repeated with `N + 1`
/// and must agree.
///
/// Candidates are scanned by order, then edge count, so every proper
/// subgraph of a candidate is decided before it; a candidate containing a
/// member is not minimal and is skipped. Graphs with isolated vertices are
/// skipped too: they give the same host as the graph without them.
pub fn decomposition_family_bruteforce(t: &Tree, max_vertices: usize) -> Result<GraphFamily, OracleError> {
    cap(max_vertices, FAMILY_CAP)?;
    t.require_balanced()?;
    let side = 2 * t.n() + 2;
    let first = family_at(t, max_vertices, side)?;
    let second = family_at(t, max_vertices, side + 1)?;
    if first != second {
        return Err(OracleError::Unstable { n: side, m: side + 1 });
    }
    Ok(first)
}

fn family_at(t: &Tree, max_vertices: usize, side: usize) -> Result<GraphFamily, OracleError> {
    let split = SplitSpec::new(side, side);
    let host = complete_bipartite(side, side);
    let mut members: Vec<Graph> = Vec::new();
    for m in 2..=max_vertices.min(side) {
        for candidate in enumerate_graphs(m)? {
            if candidate.min_degree() == 0 {
                continue;
            }
            if members.iter().any(|x| contains_subgraph(&candidate, x).is_some()) {
                continue;
            }
            let g = embed_into_side(&host, split, &candidate, Side::A)?;
            if contains_suspension(&g, t).is_some() {
                members.push(candidate);
            }
        }
    }
    Ok(GraphFamily::from_graphs(&members)?)
}
