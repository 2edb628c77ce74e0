use std::collections::{BTreeMap, BTreeSet};

use super::{check_size, OracleError, Solution};
use crate::bits::{bit, count, iter_bits, Mask};
use crate::hypergraph::{Hypergraph, Vertex};

pub fn is_hitting_set(h: &Hypergraph, set: &[Vertex]) -> bool {
    let s: BTreeSet<Vertex> = set.iter().copied().collect();
    h.edges().iter().all(|e| e.iter().any(|v| s.contains(v)))
}

pub fn is_strong_independent_set(h: &Hypergraph, set: &[Vertex]) -> bool {
    let s: BTreeSet<Vertex> = set.iter().copied().collect();
    s.len() == set.len()
        && s.iter().all(|v| h.contains_vertex(*v))
        && h.edges().iter().all(|e| e.iter().filter(|v| s.contains(v)).count() <= 1)
}

fn index_of(h: &Hypergraph) -> BTreeMap<Vertex, usize> {
    h.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

struct HittingSearch {
    edges: Vec<Mask>,
    best: usize,
    best_set: Mask,
}

impl HittingSearch {
    fn go(&mut self, chosen: Mask, forbidden: Mask, size: usize) {
        let mut branch: Option<Mask> = None;
        let mut packed: Mask = 0;
        let mut bound = 0;
        for &e in &self.edges {
            if e & chosen != 0 {
                continue;
            }
            let open = e & !forbidden;
            if open == 0 {
                return;
            }
            if branch.is_none_or(|b| count(open) < count(b)) {
                branch = Some(open);
            }
            if e & packed == 0 {
                packed |= e;
                bound += 1;
            }
        }
        let Some(branch) = branch else {
            if size < self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        };
        if size + bound >= self.best {
            return;
        }
        let mut forbidden = forbidden;
        for v in iter_bits(branch) {
            self.go(chosen | bit(v), forbidden, size + 1);
            forbidden |= bit(v);
        }
    }
}

/// Minimum hitting set (vertex cover of the hypergraph), `τ(H)`.
pub fn min_hitting_set(h: &Hypergraph) -> Result<Solution<Vec<Vertex>>, OracleError> {
    check_size(h.n())?;
    let index = index_of(h);
    let edges: Vec<Mask> = h.edges().iter().map(|e| e.iter().fold(0, |m, v| m | bit(index[v]))).collect();
    let all: Mask = edges.iter().fold(0, |m, e| m | e);
    let mut search = HittingSearch { edges, best: count(all), best_set: all };
    search.go(0, 0, 0);
    let witness = iter_bits(search.best_set).map(|i| h.vertices()[i]).collect();
    Ok(Solution { size: search.best, witness })
}

struct IndependentSearch {
    conflict: Vec<Mask>,
    best: usize,
    best_set: Mask,
}

impl IndependentSearch {
    fn go(&mut self, i: usize, chosen: Mask, size: usize) {
        let n = self.conflict.len();
        if size + (n - i) <= self.best {
            return;
        }
        if i == n {
            self.best = size;
            self.best_set = chosen;
            return;
        }
        if self.conflict[i] & chosen == 0 {
            self.go(i + 1, chosen | bit(i), size + 1);
        }
        self.go(i + 1, chosen, size);
    }
}

/// Maximum strong independent set: no edge holds two chosen vertices.
pub fn max_strong_independent_set(h: &Hypergraph) -> Result<Solution<Vec<Vertex>>, OracleError> {
    check_size(h.n())?;
    let index = index_of(h);
    let mut conflict = vec![0 as Mask; h.n()];
    for e in h.edges() {
        for &a in e.iter() {
            for &b in e.iter() {
                if a != b {
                    conflict[index[&a]] |= bit(index[&b]);
                }
            }
        }
    }
    let mut search = IndependentSearch { conflict, best: 0, best_set: 0 };
    search.go(0, 0, 0);
    let witness = iter_bits(search.best_set).map(|i| h.vertices()[i]).collect();
    Ok(Solution { size: search.best, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    /// Smallest hitting set by plain subset enumeration.
    fn brute_tau(h: &Hypergraph) -> usize {
        let vs = h.vertices();
        (0u32..1 << vs.len())
            .filter(|s| h.edges().iter().all(|e| e.iter().any(|v| s & (1 << vs.iter().position(|x| x == v).unwrap()) != 0)))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(min_hitting_set(&single()).unwrap().size, 1);
        assert_eq!(min_hitting_set(&two_disjoint()).unwrap().size, 2);
        let f = min_hitting_set(&fano()).unwrap();
        assert_eq!(f.size, 3);
        assert_eq!(brute_tau(&fano()), 3);
        assert!(is_hitting_set(&fano(), &f.witness));
    }

    #[test]
    fn independent_examples() {
        assert_eq!(max_strong_independent_set(&single()).unwrap().size, 1);
        assert_eq!(max_strong_independent_set(&fano()).unwrap().size, 1);
        let two = max_strong_independent_set(&two_disjoint()).unwrap();
        assert_eq!(two.size, 2);
        assert!(is_strong_independent_set(&two_disjoint(), &two.witness));
        assert!(is_strong_independent_set(&two_disjoint(), &[0, 3]));
        assert!(!is_strong_independent_set(&two_disjoint(), &[0, 1]));
    }

    #[test]
    fn mixed_edge_sizes_and_empty() {
        let h = Hypergraph::new(4, vec![vec![0], vec![1, 2], vec![1, 2, 3]]).unwrap();
        let s = min_hitting_set(&h).unwrap();
        assert_eq!(s.size, 2);
        assert_eq!(s.size, brute_tau(&h));
        let e = Hypergraph::new(4, Vec::<Vec<Vertex>>::new()).unwrap();
        assert_eq!(min_hitting_set(&e).unwrap().size, 0);
        assert_eq!(max_strong_independent_set(&e).unwrap().size, 4);
        let none = Hypergraph::new(0, Vec::<Vec<Vertex>>::new()).unwrap();
        assert_eq!(max_strong_independent_set(&none).unwrap().size, 0);
    }

    #[test]
    fn agrees_with_enumeration_on_sparse_ids() {
        let h = Hypergraph::from_parts(20, [1, 4, 6, 9, 13, 17], [[1, 4, 6], [4, 9, 13], [6, 13, 17], [1, 9, 17]]).unwrap();
        assert_eq!(min_hitting_set(&h).unwrap().size, brute_tau(&h));
    }
}
