//! Backtracking subgraph (monomorphism) search.
//!
//! Pattern vertices are placed in breadth-first order, starting from a
//! vertex of largest degree and visiting neighbours by descending degree.
//! Candidates for the next pattern vertex are the common host neighbours of
//! the images of its already-placed pattern neighbours, restricted to the
//! allowed host set, unused, and of sufficient degree. Two unused candidate
//! host vertices that are twins (equal open or closed neighbourhoods) are
//! interchangeable by a host automorphism fixing everything else, so only
//! the first of each twin group is expanded.

use crate::graph::{bits, Graph};

/// Why a search stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    /// The callback asked to stop.
    Done,
    /// The expansion budget ran out.
    Budget,
}

/// Host-side data shared by repeated searches in the same host.
pub(crate) struct HostIndex<'a> {
    pub(crate) host: &'a Graph,
    pub(crate) degree: Vec<usize>,
    false_twin: Vec<usize>,
    true_twin: Vec<usize>,
}

impl<'a> HostIndex<'a> {
    pub(crate) fn new(host: &'a Graph) -> HostIndex<'a> {
        let n = host.n();
        let degree = host.degrees();
        let mut false_twin: Vec<usize> = (0..n).collect();
        let mut true_twin: Vec<usize> = (0..n).collect();
        let closed = |v: usize| {
            let mut row = host.row(v).to_vec();
            bits::set(&mut row, v);
            row
        };
        let mut open_seen: std::collections::HashMap<&[u64], usize> = Default::default();
        let mut closed_seen: std::collections::HashMap<Vec<u64>, usize> = Default::default();
        for v in 0..n {
            false_twin[v] = *open_seen.entry(host.row(v)).or_insert(v);
            true_twin[v] = *closed_seen.entry(closed(v)).or_insert(v);
        }
        HostIndex {
            host,
            degree,
            false_twin,
            true_twin,
        }
    }

    /// Two distinct vertices swapped by a host automorphism fixing all others.
    pub(crate) fn are_twins(&self, u: usize, w: usize) -> bool {
        self.false_twin[u] == self.false_twin[w] || self.true_twin[u] == self.true_twin[w]
    }
}

/// Pattern-side plan: placement order and, for each placed vertex, the
/// positions of its earlier-placed neighbours.
pub(crate) struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    pub(crate) fn new(pattern: &Graph) -> Plan {
        let n = pattern.n();
        let degree = pattern.degrees();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let start = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex exists");
            placed[start] = true;
            let mut head = order.len();
            order.push(start);
            while head < order.len() {
                let u = order[head];
                head += 1;
                let mut next: Vec<usize> = pattern.neighbors(u).filter(|&w| !placed[w]).collect();
                next.sort_by_key(|&w| (std::cmp::Reverse(degree[w]), w));
                for w in next {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let back = order
            .iter()
            .map(|&v| {
                pattern
                    .neighbors(v)
                    .map(|w| position[w])
                    .filter(|&p| p < position[v])
                    .collect()
            })
            .collect();
        Plan { order, back, degree }
    }
}

/// One backtracking run. `on_found` receives the map `pattern -> host` and
/// returns `true` to stop the search.
pub(crate) struct Matcher<'a, 'h> {
    index: &'a HostIndex<'h>,
    plan: &'a Plan,
    allowed: Vec<u64>,
    images: Vec<usize>,
    used: Vec<u64>,
    budget: &'a mut Budget,
}

/// Counts candidate expansions across one or more searches.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    pub(crate) limit: Option<u64>,
    pub(crate) spent: u64,
}

impl Budget {
    pub(crate) fn new(limit: Option<u64>) -> Budget {
        Budget { limit, spent: 0 }
    }

    fn charge(&mut self) -> bool {
        self.spent += 1;
        self.limit.is_none_or(|l| self.spent <= l)
    }
}

impl<'a, 'h> Matcher<'a, 'h> {
    pub(crate) fn new(
        index: &'a HostIndex<'h>,
        plan: &'a Plan,
        allowed: Vec<u64>,
        budget: &'a mut Budget,
    ) -> Matcher<'a, 'h> {
        let stride = index.host.stride();
        debug_assert_eq!(allowed.len(), stride);
        Matcher {
            index,
            plan,
            allowed,
            images: Vec::with_capacity(plan.order.len()),
            used: vec![0; stride],
            budget,
        }
    }

    pub(crate) fn run(&mut self, on_found: &mut dyn FnMut(&[usize]) -> bool) -> Result<(), Stop> {
        if bits::count(&self.allowed) < self.plan.order.len() {
            return Ok(());
        }
        self.extend(on_found)
    }

    fn extend(&mut self, on_found: &mut dyn FnMut(&[usize]) -> bool) -> Result<(), Stop> {
        let depth = self.images.len();
        if depth == self.plan.order.len() {
            let mut map = vec![0; depth];
            for (i, &v) in self.plan.order.iter().enumerate() {
                map[v] = self.images[i];
            }
            return if on_found(&map) { Err(Stop::Done) } else { Ok(()) };
        }
        let host = self.index.host;
        let mut candidates = self.allowed.clone();
        for (c, u) in candidates.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        for &p in &self.plan.back[depth] {
            for (c, r) in candidates.iter_mut().zip(host.row(self.images[p])) {
                *c &= r;
            }
        }
        let need = self.plan.degree[self.plan.order[depth]];
        let mut tried: Vec<usize> = Vec::new();
        let list: Vec<usize> = bits::Ones::new(&candidates).collect();
        for h in list {
            if self.index.degree[h] < need {
                continue;
            }
            if tried.iter().any(|&t| self.index.are_twins(t, h)) {
                continue;
            }
            tried.push(h);
            if !self.budget.charge() {
                return Err(Stop::Budget);
            }
            bits::set(&mut self.used, h);
            self.images.push(h);
            let r = self.extend(on_found);
            self.images.pop();
            bits::clear(&mut self.used, h);
            r?;
        }
        Ok(())
    }
}

pub(crate) fn full_row(n: usize) -> Vec<u64> {
    let mut row = vec![0; bits::words_for(n)];
    for v in 0..n {
        bits::set(&mut row, v);
    }
    row
}
