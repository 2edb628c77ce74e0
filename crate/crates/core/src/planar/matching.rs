use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{local_complete_graph, LocalCompleteGraph, Side};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::oracles::{is_induced_matching, is_strong_independent_set};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex {vertex} lies in no hyperedge")]
    UnmatchableVertex { vertex: Vertex },
    #[error("input set is not strongly independent")]
    NotStronglyIndependent,
    #[error("input edges are not an induced matching")]
    NotInducedMatching,
}

/// Strong independent sets of `H` and induced matchings of `G^K_H`, mapped
/// into each other without changing size.
#[derive(Debug, Clone)]
pub struct MatchingTransform {
    pub graph: LocalCompleteGraph,
    /// Vertex → edge vertex of its first incident hyperedge.
    first_edge: BTreeMap<Vertex, Vertex>,
}

pub fn is_to_induced_matching(h: &Hypergraph) -> MatchingTransform {
    let graph = local_complete_graph(h);
    let mut first_edge = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e.iter() {
            first_edge.entry(v).or_insert(graph.tags.edge_node[i]);
        }
    }
    MatchingTransform { graph, first_edge }
}

impl MatchingTransform {
    /// Pairs every member of `set` with an edge vertex of a hyperedge through
    /// it. Members of a strong independent set share no hyperedge, so the
    /// chosen edge vertices are distinct.
    pub fn forward(&self, h: &Hypergraph, set: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>, MatchingError> {
        if !is_strong_independent_set(h, set) {
            return Err(MatchingError::NotStronglyIndependent);
        }
        let matching = set
            .iter()
            .map(|&u| {
                let b = *self.first_edge.get(&u).ok_or(MatchingError::UnmatchableVertex { vertex: u })?;
                Ok((u.min(b), u.max(b)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        debug_assert!(is_induced_matching(&self.graph.graph, &matching));
        Ok(matching)
    }

    /// Keeps the V1 end of every matched edge (the smaller end when both are
    /// V1 vertices).
    pub fn backward(&self, h: &Hypergraph, matching: &[(Vertex, Vertex)]) -> Result<Vec<Vertex>, MatchingError> {
        if !is_induced_matching(&self.graph.graph, matching) {
            return Err(MatchingError::NotInducedMatching);
        }
        let side = |v: Vertex| self.graph.tags.side(v);
        let mut set: Vec<Vertex> = matching
            .iter()
            .map(|&(a, b)| match (side(a), side(b)) {
                (Side::V1, Side::V1) => a.min(b),
                (Side::V1, _) => a,
                _ => b,
            })
            .collect();
        set.sort_unstable();
        debug_assert!(is_strong_independent_set(h, &set));
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;
    use crate::oracles::{max_induced_matching, max_strong_independent_set};

    #[test]
    fn single_edge() {
        let h = single();
        let t = is_to_induced_matching(&h);
        assert_eq!(t.forward(&h, &[0]).unwrap(), vec![(0, 3)]);
        assert_eq!(t.backward(&h, &[(0, 3)]).unwrap(), vec![0]);
        assert_eq!(t.backward(&h, &[(1, 2)]).unwrap(), vec![1]);
    }

    #[test]
    fn fano_sizes_agree() {
        let h = fano();
        let t = is_to_induced_matching(&h);
        assert_eq!(max_induced_matching(&t.graph.graph).unwrap().size, 1);
        assert_eq!(max_strong_independent_set(&h).unwrap().size, 1);
    }

    #[test]
    fn two_disjoint_edges() {
        let h = two_disjoint();
        let t = is_to_induced_matching(&h);
        let m = t.forward(&h, &[0, 3]).unwrap();
        assert_eq!(m.len(), 2);
        assert!(is_induced_matching(&t.graph.graph, &m));
        assert_eq!(t.backward(&h, &m).unwrap(), vec![0, 3]);
    }

    #[test]
    fn misuse_is_reported() {
        let h = single();
        let t = is_to_induced_matching(&h);
        assert_eq!(t.forward(&h, &[0, 1]), Err(MatchingError::NotStronglyIndependent));
        assert_eq!(t.backward(&h, &[(0, 1), (2, 3)]), Err(MatchingError::NotInducedMatching));
        let lonely = Hypergraph::new(4, [[0, 1, 2]]).unwrap();
        let t = is_to_induced_matching(&lonely);
        assert_eq!(t.forward(&lonely, &[3]), Err(MatchingError::UnmatchableVertex { vertex: 3 }));
    }
}
