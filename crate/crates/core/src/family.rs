use std::collections::BTreeMap;

use crate::freeness::contains_subgraph;
use crate::graph::{canonical_form, CanonicalCode, Graph, GraphError};

/// A set of graphs up to isomorphism, keyed and ordered by canonical code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphFamily {
    members: BTreeMap<CanonicalCode, Graph>,
}

impl GraphFamily {
    pub fn new() -> GraphFamily {
        GraphFamily::default()
    }

    pub fn from_graphs<'a, I>(graphs: I) -> Result<GraphFamily, GraphError>
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut family = GraphFamily::new();
        for g in graphs {
            family.insert(g)?;
        }
        Ok(family)
    }

    /// Adds `g` unless an isomorphic member exists; returns whether it was new.
    pub fn insert(&mut self, g: &Graph) -> Result<bool, GraphError> {
        let code = canonical_form(g)?;
        if self.members.contains_key(&code) {
            return Ok(false);
        }
        self.members.insert(code.clone(), code.to_graph());
        Ok(true)
    }

    pub fn contains(&self, g: &Graph) -> Result<bool, GraphError> {
        Ok(self.members.contains_key(&canonical_form(g)?))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members as canonical representatives, in code order.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.members.keys()
    }

    /// Members containing no other member as a subgraph.
    pub fn minimal_elements(&self) -> GraphFamily {
        let entries: Vec<(&CanonicalCode, &Graph)> = self.members.iter().collect();
        let mut minimal = BTreeMap::new();
        for (code, g) in &entries {
            let dominated = entries.iter().any(|(other_code, other)| {
                other_code != code
                    && other.n() <= g.n()
                    && other.edge_count() <= g.edge_count()
                    && contains_subgraph(g, other).is_some()
            });
            if !dominated {
                minimal.insert((*code).clone(), (*g).clone());
            }
        }
        GraphFamily { members: minimal }
    }

    /// `host` contains no member.
    pub fn is_free(&self, host: &Graph) -> bool {
        self.members.values().all(|m| contains_subgraph(host, m).is_none())
    }
}

impl serde::Serialize for GraphFamily {
    /// As the list of canonical graph6 codes.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.members.keys())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};

    #[test]
    fn dedup_and_minimal() {
        let fam = GraphFamily::from_graphs(&[star(2), complete(3), path(4), path(3).permuted(&[2, 0, 1])]).unwrap();
        assert_eq!(fam.len(), 3);
        let min = fam.minimal_elements();
        assert_eq!(min.len(), 1);
        assert!(min.contains(&path(3)).unwrap());
        assert!(!fam.is_free(&path(3)));
        assert!(fam.is_free(&path(2)));
    }
}
