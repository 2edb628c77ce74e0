use std::collections::BTreeSet;

use super::{check_size, OracleError, Solution};
use crate::bits::{bit, count, iter_bits, Mask};
use crate::graph::{BipartiteIncidenceGraph, SimpleGraph};
use crate::hypergraph::Vertex;

pub fn is_dominating_set(g: &SimpleGraph, set: &[Vertex]) -> bool {
    let s: BTreeSet<Vertex> = set.iter().copied().collect();
    s.iter().all(|&v| g.contains(v)) && g.vertices().all(|v| s.contains(&v) || g.neighbors(v).iter().any(|u| s.contains(u)))
}

/// `set ⊆ V1` and every V2 vertex has a neighbour in `set`.
pub fn is_quasi_dominating_set(b: &BipartiteIncidenceGraph, set: &[Vertex]) -> bool {
    let s: BTreeSet<Vertex> = set.iter().copied().collect();
    s.iter().all(|&v| b.tags.side.get(&v) == Some(&crate::graph::Side::V1))
        && b.tags.v2().all(|w| b.graph.neighbors(w).iter().any(|u| s.contains(u)))
}

struct DominationSearch {
    closed: Vec<Mask>,
    allowed: Mask,
    all: Mask,
    best: usize,
    best_set: Mask,
}

impl DominationSearch {
    fn go(&mut self, dominated: Mask, chosen: Mask, forbidden: Mask, size: usize) {
        let open = self.all & !dominated;
        if open == 0 {
            if size < self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        }
        let usable = self.allowed & !forbidden;
        let mut branch: Option<Mask> = None;
        for i in iter_bits(open) {
            let cands = self.closed[i] & usable;
            if cands == 0 {
                return;
            }
            if branch.is_none_or(|b| count(cands) < count(b)) {
                branch = Some(cands);
            }
        }
        let reach = iter_bits(usable).map(|v| count(self.closed[v] & open)).max().unwrap_or(0);
        let bound = count(open).div_ceil(reach.max(1));
        if size + bound >= self.best {
            return;
        }
        let mut forbidden = forbidden;
        for v in iter_bits(branch.expect("open vertices exist")) {
            self.go(dominated | self.closed[v], chosen | bit(v), forbidden, size + 1);
            forbidden |= bit(v);
        }
    }
}

/// Minimum dominating set avoiding `excluded`; excluded vertices must still
/// be dominated.
pub fn min_dominating_set(g: &SimpleGraph, excluded: &[Vertex]) -> Result<Solution<Vec<Vertex>>, OracleError> {
    let ids: Vec<Vertex> = g.vertices().collect();
    check_size(ids.len())?;
    let pos = |v: &Vertex| ids.binary_search(v).expect("vertex of g");
    let closed: Vec<Mask> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(bit(pos(&v)), |m, u| m | bit(pos(u))))
        .collect();
    let banned: Mask = excluded.iter().filter(|v| g.contains(**v)).fold(0, |m, v| m | bit(pos(v)));
    let all: Mask = if ids.is_empty() { 0 } else { Mask::MAX >> (128 - ids.len()) };
    let allowed = all & !banned;
    if let Some(i) = (0..ids.len()).find(|&i| closed[i] & allowed == 0) {
        return Err(OracleError::Infeasible { vertex: ids[i] });
    }
    let mut search = DominationSearch { closed, allowed, all, best: count(allowed) + 1, best_set: allowed };
    search.go(0, 0, 0, 0);
    let witness = iter_bits(search.best_set).map(|i| ids[i]).collect();
    Ok(Solution { size: search.best, witness })
}

/// Minimum `D ⊆ V1` adjacent to every V2 vertex, found by trying subsets in
/// order of increasing size.
pub fn min_quasi_dominating_set(b: &BipartiteIncidenceGraph) -> Result<Solution<Vec<Vertex>>, OracleError> {
    let v1: Vec<Vertex> = b.tags.v1().collect();
    check_size(v1.len())?;
    let mut need = Vec::new();
    for w in b.tags.v2() {
        let m = b
            .graph
            .neighbors(w)
            .iter()
            .filter_map(|u| v1.binary_search(u).ok())
            .fold(0 as Mask, |m, i| m | bit(i));
        if m == 0 {
            return Err(OracleError::Infeasible { vertex: w });
        }
        need.push(m);
    }

    fn pick(need: &[Mask], n: usize, start: usize, left: usize, chosen: Mask) -> Option<Mask> {
        if left == 0 {
            return need.iter().all(|&m| m & chosen != 0).then_some(chosen);
        }
        (start..n).find_map(|i| pick(need, n, i + 1, left - 1, chosen | bit(i)))
    }

    for size in 0..=v1.len() {
        if let Some(mask) = pick(&need, v1.len(), 0, size, 0) {
            let witness = iter_bits(mask).map(|i| v1[i]).collect();
            return Ok(Solution { size, witness });
        }
    }
    unreachable!("all of V1 dominates every V2 vertex with a neighbour")
}
