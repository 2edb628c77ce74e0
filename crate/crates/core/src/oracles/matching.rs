use std::collections::BTreeSet;

use super::{check_size, OracleError, Solution};
use crate::bits::{bit, count, iter_bits, Mask};
use crate::graph::SimpleGraph;
use crate::hypergraph::Vertex;

/// Edges pairwise share no endpoint and no graph edge joins two of them.
pub fn is_induced_matching(g: &SimpleGraph, edges: &[(Vertex, Vertex)]) -> bool {
    if !edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
        return false;
    }
    let mut used = BTreeSet::new();
    for &(u, v) in edges {
        if !used.insert(u) || !used.insert(v) {
            return false;
        }
    }
    edges.iter().enumerate().all(|(i, &(a, b))| {
        edges[i + 1..]
            .iter()
            .all(|&(c, d)| !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
    })
}

struct Search {
    conflict: Vec<Mask>,
    best: usize,
    best_set: Mask,
}

impl Search {
    /// Maximum independent set of the edge-conflict graph restricted to
    /// `cand`. Some maximal solution meets the closed neighbourhood of any
    /// candidate, so branching over that neighbourhood is exhaustive.
    fn go(&mut self, cand: Mask, chosen: Mask, size: usize) {
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        }
        if size + count(cand) <= self.best {
            return;
        }
        let pivot = iter_bits(cand).min_by_key(|&e| count(self.conflict[e] & cand)).unwrap();
        for e in iter_bits((self.conflict[pivot] | bit(pivot)) & cand) {
            self.go(cand & !(self.conflict[e] | bit(e)), chosen | bit(e), size + 1);
        }
    }
}

pub fn max_induced_matching(g: &SimpleGraph) -> Result<Solution<Vec<(Vertex, Vertex)>>, OracleError> {
    let ids: Vec<Vertex> = g.vertices().collect();
    check_size(ids.len())?;
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    check_size(edges.len())?;
    let pos = |v: &Vertex| ids.binary_search(v).unwrap();
    let reach: Vec<Mask> = edges
        .iter()
        .map(|&(a, b)| {
            let mut m = bit(pos(&a)) | bit(pos(&b));
            for u in g.neighbors(a).iter().chain(g.neighbors(b)) {
                m |= bit(pos(u));
            }
            m
        })
        .collect();
    let ends: Vec<Mask> = edges.iter().map(|(a, b)| bit(pos(a)) | bit(pos(b))).collect();
    let conflict: Vec<Mask> = (0..edges.len())
        .map(|i| {
            (0..edges.len())
                .filter(|&j| j != i && ends[j] & reach[i] != 0)
                .fold(0, |m, j| m | bit(j))
        })
        .collect();
    let all: Mask = if edges.is_empty() { 0 } else { Mask::MAX >> (128 - edges.len()) };
    let mut search = Search { conflict, best: 0, best_set: 0 };
    search.go(all, 0, 0);
    let witness = iter_bits(search.best_set).map(|i| edges[i]).collect();
    Ok(Solution { size: search.best, witness })
}
