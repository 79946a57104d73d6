//! Exact subgraph containment, suspensions, greedy tree embedding and
//! vertex-disjoint tree packing.

mod search;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, suspension, Embedding, Graph};
use crate::tree::Tree;
use search::{full_row, Budget, HostIndex, Matcher, Plan, Stop};

/// Largest number of trees `pack_disjoint_trees` accepts.
pub const PACKING_CAP: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreenessError {
    #[error("host minimum degree {min_degree} is below |T| - 1 = {needed}")]
    MinDegreeTooLow { min_degree: usize, needed: usize },
    #[error("{count} patterns exceed the packing cap of {cap}")]
    TooManyPatterns { count: usize, cap: usize },
}

/// Result of a search that may be cut short by an expansion budget.
/// `BudgetExhausted` never means the pattern is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Embedding),
    Absent,
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn found(self) -> Option<Embedding> {
        match self {
            SearchOutcome::Found(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Absent => "absent",
            SearchOutcome::BudgetExhausted => "budget_exhausted",
        }
    }
}

/// Searches for `pattern` as a (not necessarily induced) subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    contains_subgraph_budgeted(host, pattern, None).found()
}

pub fn contains_subgraph_budgeted(host: &Graph, pattern: &Graph, budget: Option<u64>) -> SearchOutcome {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return SearchOutcome::Absent;
    }
    let index = HostIndex::new(host);
    let plan = Plan::new(pattern);
    let mut budget = Budget::new(budget);
    first_embedding(&index, &plan, full_row(host.n()), &mut budget)
}

fn first_embedding(index: &HostIndex, plan: &Plan, allowed: Vec<u64>, budget: &mut Budget) -> SearchOutcome {
    let mut found = None;
    let r = Matcher::new(index, plan, allowed, budget).run(&mut |map| {
        found = Some(map.to_vec());
        true
    });
    match (r, found) {
        (_, Some(map)) => SearchOutcome::Found(Embedding { map }),
        (Err(Stop::Budget), None) => SearchOutcome::BudgetExhausted,
        _ => SearchOutcome::Absent,
    }
}

/// Searches for the suspension of `t` in `host`. The returned embedding is
/// of `suspension(t.graph())`: tree vertices first, the apex last.
pub fn contains_suspension(host: &Graph, t: &Tree) -> Option<Embedding> {
    contains_suspension_of(host, t.graph(), None).found()
}

pub fn contains_suspension_budgeted(host: &Graph, t: &Tree, budget: Option<u64>) -> SearchOutcome {
    contains_suspension_of(host, t.graph(), budget)
}

/// Apex reduction for any base graph `h`: the suspension of `h` sits in
/// `host` iff some vertex `v` with `deg(v) >= |h|` has a copy of `h` inside
/// the subgraph induced by `N(v)`. Apex candidates are tried by descending
/// degree; twin apexes are skipped.
pub fn contains_suspension_of(host: &Graph, h: &Graph, budget: Option<u64>) -> SearchOutcome {
    let size = h.n();
    if size + 1 > host.n() {
        return SearchOutcome::Absent;
    }
    let index = HostIndex::new(host);
    let plan = Plan::new(h);
    let mut budget = Budget::new(budget);
    let mut apexes: Vec<usize> = (0..host.n()).filter(|&v| index.degree[v] >= size).collect();
    apexes.sort_by_key(|&v| (std::cmp::Reverse(index.degree[v]), v));
    let mut tried: Vec<usize> = Vec::new();
    for apex in apexes {
        if tried.iter().any(|&t| index.are_twins(t, apex)) {
            continue;
        }
        tried.push(apex);
        match first_embedding(&index, &plan, host.row(apex).to_vec(), &mut budget) {
            SearchOutcome::Found(Embedding { mut map }) => {
                map.push(apex);
                return SearchOutcome::Found(Embedding { map });
            }
            SearchOutcome::BudgetExhausted => return SearchOutcome::BudgetExhausted,
            SearchOutcome::Absent => {}
        }
    }
    SearchOutcome::Absent
}

/// Convenience: is `host` free of the suspension of `t`?
pub fn is_suspension_free(host: &Graph, t: &Tree) -> bool {
    contains_suspension(host, t).is_none()
}

/// Embeds `t` greedily when `δ(host) >= |T| - 1`: tree vertices are placed
/// in breadth-first order from vertex 0, each on the smallest unused
/// neighbour of its parent's image.
pub fn greedy_embed_min_degree(host: &Graph, t: &Tree) -> Result<Embedding, FreenessError> {
    let size = t.n();
    let needed = size.saturating_sub(1);
    let min_degree = host.min_degree();
    if host.n() == 0 || min_degree < needed {
        return Err(FreenessError::MinDegreeTooLow { min_degree, needed });
    }
    let tree = t.graph();
    let mut map = vec![usize::MAX; size];
    let mut used = vec![false; host.n()];
    map[0] = 0;
    used[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for c in tree.neighbors(u) {
            if map[c] != usize::MAX {
                continue;
            }
            // At most |T| - 1 images are in use and the parent's image has
            // at least |T| - 1 neighbours, one of them free.
            let image = host
                .neighbors(map[u])
                .find(|&h| !used[h])
                .expect("minimum degree guarantees a free neighbour");
            map[c] = image;
            used[image] = true;
            queue.push_back(c);
        }
    }
    Ok(Embedding { map })
}

/// Vertex-disjoint embeddings of several trees, one per pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Packing {
    pub embeddings: Vec<Embedding>,
}

impl Packing {
    pub fn is_valid(&self, host: &Graph, patterns: &[Tree]) -> bool {
        if self.embeddings.len() != patterns.len() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for (e, t) in self.embeddings.iter().zip(patterns) {
            if !e.is_valid(t.graph(), host) {
                return false;
            }
            for &h in &e.map {
                if std::mem::replace(&mut seen[h], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustive search for vertex-disjoint copies of every pattern.
/// `Ok(None)` certifies that no packing exists.
pub fn pack_disjoint_trees(host: &Graph, patterns: &[Tree]) -> Result<Option<Packing>, FreenessError> {
    if patterns.len() > PACKING_CAP {
        return Err(FreenessError::TooManyPatterns {
            count: patterns.len(),
            cap: PACKING_CAP,
        });
    }
    let total: usize = patterns.iter().map(Tree::n).sum();
    if total > host.n() {
        return Ok(None);
    }
    // Larger trees first prune earlier; the result is reported in input order.
    let mut order: Vec<usize> = (0..patterns.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(patterns[i].n()), i));
    let index = HostIndex::new(host);
    let plans: Vec<Plan> = order.iter().map(|&i| Plan::new(patterns[i].graph())).collect();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut budget = Budget::new(None);
    if !pack_from(&index, &plans, 0, full_row(host.n()), &mut chosen, &mut budget) {
        return Ok(None);
    }
    let mut embeddings = vec![Embedding { map: Vec::new() }; patterns.len()];
    for (slot, map) in order.into_iter().zip(chosen) {
        embeddings[slot] = Embedding { map };
    }
    Ok(Some(Packing { embeddings }))
}

fn pack_from(
    index: &HostIndex,
    plans: &[Plan],
    i: usize,
    allowed: Vec<u64>,
    chosen: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> bool {
    if i == plans.len() {
        return true;
    }
    let mut success = false;
    let mut inner_budget = Budget::new(None);
    let _ = Matcher::new(index, &plans[i], allowed.clone(), &mut inner_budget).run(&mut |map| {
        let mut rest = allowed.clone();
        for &h in map {
            bits::clear(&mut rest, h);
        }
        chosen.push(map.to_vec());
        if pack_from(index, plans, i + 1, rest, chosen, budget) {
            success = true;
            return true;
        }
        chosen.pop();
        false
    });
    budget.spent += inner_budget.spent;
    success
}

/// The pattern graph a suspension search looks for.
pub fn suspension_pattern(t: &Tree) -> Graph {
    suspension(t.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, disjoint_union, path, petersen};
    use crate::tree::certify_tree;

    #[test]
    fn clique_and_bipartite() {
        let e = contains_subgraph(&complete(5), &complete(3)).unwrap();
        assert!(e.is_valid(&complete(3), &complete(5)));
        assert!(contains_subgraph(&complete_bipartite(5, 5), &complete(3)).is_none());
    }

    #[test]
    fn paths_in_cycles() {
        assert!(contains_subgraph(&cycle(6), &path(4)).is_some());
        let two_triangles = disjoint_union(&[&complete(3), &complete(3)]);
        assert!(contains_subgraph(&two_triangles, &path(4)).is_none());
    }

    #[test]
    fn suspension_of_p4_in_itself() {
        let p4 = certify_tree(&path(4)).unwrap();
        let host = suspension(&path(4));
        let e = contains_suspension(&host, &p4).unwrap();
        assert_eq!(e.map[4], 4);
        assert!(e.is_valid(&host, &host));
    }

    #[test]
    fn budget_is_reported_separately() {
        let host = complete_bipartite(8, 8);
        let outcome = contains_subgraph_budgeted(&host, &complete(3), Some(3));
        assert_ne!(outcome, SearchOutcome::Absent);
        assert_eq!(
            contains_subgraph_budgeted(&host, &complete(3), None),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn greedy_examples() {
        let p4 = certify_tree(&path(4)).unwrap();
        for host in [complete(4), petersen()] {
            let e = greedy_embed_min_degree(&host, &p4).unwrap();
            assert!(e.is_valid(p4.graph(), &host));
        }
        assert_eq!(
            greedy_embed_min_degree(&cycle(5), &p4),
            Err(FreenessError::MinDegreeTooLow {
                min_degree: 2,
                needed: 3
            })
        );
    }

    #[test]
    fn packing_examples() {
        let p3 = certify_tree(&path(3)).unwrap();
        let two_triangles = disjoint_union(&[&complete(3), &complete(3)]);
        let pats = vec![p3.clone(), p3.clone()];
        let packing = pack_disjoint_trees(&two_triangles, &pats).unwrap().unwrap();
        assert!(packing.is_valid(&two_triangles, &pats));
        assert!(pack_disjoint_trees(&complete(4), &pats).unwrap().is_none());
        let three = vec![p3.clone(), p3.clone(), p3];
        let packing = pack_disjoint_trees(&cycle(9), &three).unwrap().unwrap();
        assert!(packing.is_valid(&cycle(9), &three));
    }

    #[test]
    fn packing_needs_backtracking() {
        // Path 0-1-2-3-4-5: two disjoint P3 exist only as {0,1,2},{3,4,5}.
        let p3 = certify_tree(&path(3)).unwrap();
        let pats = vec![p3.clone(), p3];
        let host = path(6);
        assert!(pack_disjoint_trees(&host, &pats)
            .unwrap()
            .unwrap()
            .is_valid(&host, &pats));
    }
}
