use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::hypergraph::{Hypergraph, Vertex};
use crate::lp::{maximize, LpOutcome};
use crate::scalar::Scalar;
use crate::Rational;

/// Optimal fractional cover together with an optimal fractional packing.
///
/// Both LPs are solved; equal objective values certify optimality of each.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalCover<T> {
    pub value: T,
    /// Vertex weights, in vertex order.
    pub weights: Vec<(Vertex, T)>,
    /// Edge weights, in edge order.
    pub packing: Vec<T>,
}

impl<T: Scalar> FractionalCover<T> {
    /// Re-checks feasibility of both solutions and that their values agree.
    pub fn certify(&self, h: &Hypergraph) -> bool {
        if self.weights.len() != h.n() || self.packing.len() != h.m() {
            return false;
        }
        let weight = |v: Vertex| {
            self.weights
                .binary_search_by_key(&v, |(u, _)| *u)
                .map(|i| self.weights[i].1.clone())
                .unwrap_or_else(|_| T::zero())
        };
        let covers = h.edges().iter().all(|e| {
            let s = e.iter().fold(T::zero(), |s, &v| s + weight(v));
            !(s - T::one()).definitely_negative()
        });
        let nonneg = self.weights.iter().all(|(_, w)| !w.definitely_negative())
            && self.packing.iter().all(|y| !y.definitely_negative());
        let packs = h.vertices().iter().all(|&v| {
            let s = h.incidence(v).into_iter().fold(T::zero(), |s, i| s + self.packing[i].clone());
            !(s - T::one()).definitely_positive()
        });
        let primal = self.weights.iter().fold(T::zero(), |s, (_, w)| s + w.clone());
        let dual = self.packing.iter().fold(T::zero(), |s, y| s + y.clone());
        covers && nonneg && packs && primal.approx_eq(&self.value) && dual.approx_eq(&self.value)
    }
}

/// Solves `min Σ x_v` over `Σ_{v∈B} x_v ≥ 1`, `x ≥ 0` and its dual packing LP.
///
/// The upper bounds `x_v ≤ 1` are never active at an optimum and are left out.
pub fn fractional_cover_in<T: Scalar>(h: &Hypergraph) -> FractionalCover<T> {
    let n = h.n();
    let m = h.m();
    let index = |v: &Vertex| h.vertices().binary_search(v).expect("edge vertex in vertex set");

    // cover: columns x_0..x_n, s_0..s_m
    let mut a = vec![vec![T::zero(); n + m]; m];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            a[i][index(v)] = T::one();
        }
        a[i][n + i] = -T::one();
    }
    let c: Vec<T> = (0..n + m).map(|j| if j < n { -T::one() } else { T::zero() }).collect();
    let (cover_value, x) = match maximize(&a, &vec![T::one(); m], &c) {
        LpOutcome::Optimal { value, x } => (-value, x),
        other => panic!("cover LP is feasible and bounded, got {other:?}"),
    };

    // packing: columns y_0..y_m, t_0..t_n
    let mut a = vec![vec![T::zero(); m + n]; n];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            a[index(v)][i] = T::one();
        }
    }
    for (r, row) in a.iter_mut().enumerate() {
        row[m + r] = T::one();
    }
    let c: Vec<T> = (0..m + n).map(|j| if j < m { T::one() } else { T::zero() }).collect();
    let (pack_value, y) = match maximize(&a, &vec![T::one(); n], &c) {
        LpOutcome::Optimal { value, x } => (value, x),
        other => panic!("packing LP is feasible and bounded, got {other:?}"),
    };
    assert!(cover_value.approx_eq(&pack_value), "LP duality gap: {cover_value} vs {pack_value}");

    FractionalCover {
        value: cover_value,
        weights: h.vertices().iter().copied().zip(x).collect(),
        packing: y.into_iter().take(m).collect(),
    }
}

/// `τ*(H)` in exact arithmetic.
pub fn fractional_cover(h: &Hypergraph) -> Rational {
    fractional_cover_in::<Rational>(h).value
}

/// Integer edge multiplicities making every vertex degree equal to `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicities {
    pub per_edge: Vec<BigInt>,
    pub r: BigInt,
}

impl Multiplicities {
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        self.r > BigInt::zero()
            && self.per_edge.len() == h.m()
            && self.per_edge.iter().all(|k| *k >= BigInt::zero())
            && h.vertices().iter().all(|&v| {
                h.incidence(v).into_iter().fold(BigInt::zero(), |s, i| s + &self.per_edge[i]) == self.r
            })
    }
}

/// Decides quasi-regularizability by exact feasibility of `Σ_{B∋v} y_B = 1`,
/// `y ≥ 0`, then clears denominators. `None` when no positive common degree
/// exists, which includes every hypergraph with an isolated vertex.
pub fn quasi_regular_multiplicities(h: &Hypergraph) -> Option<Multiplicities> {
    if h.m() == 0 {
        return None;
    }
    let n = h.n();
    let m = h.m();
    let mut a = vec![vec![Rational::zero(); m]; n];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            let r = h.vertices().binary_search(v).expect("edge vertex in vertex set");
            a[r][i] = Rational::one();
        }
    }
    let y = match maximize(&a, &vec![Rational::one(); n], &vec![Rational::zero(); m]) {
        LpOutcome::Optimal { x, .. } => x,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => unreachable!("zero objective"),
    };
    let lcm = y.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let scaled: Vec<BigInt> = y.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = scaled.iter().fold(lcm.clone(), |g, k| g.gcd(k));
    Some(Multiplicities { per_edge: scaled.iter().map(|k| k / &g).collect(), r: lcm / g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(fractional_cover(&single()), q(1, 1));
        assert_eq!(fractional_cover(&fano()), q(7, 3));
        let h = Hypergraph::new(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert_eq!(fractional_cover(&h), q(1, 1));
    }

    #[test]
    fn certificates_check() {
        for h in [single(), fano(), two_disjoint()] {
            let exact = fractional_cover_in::<Rational>(&h);
            assert!(exact.certify(&h));
            let float = fractional_cover_in::<f64>(&h);
            assert!(float.certify(&h));
        }
        let mut bad = fractional_cover_in::<Rational>(&fano());
        bad.weights[0].1 = q(0, 1);
        assert!(!bad.certify(&fano()));
    }

    #[test]
    fn empty_hypergraph_has_zero_cover() {
        let h = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(fractional_cover(&h), q(0, 1));
    }

    #[test]
    fn multiplicities() {
        let m = quasi_regular_multiplicities(&fano()).unwrap();
        assert_eq!(m.r, BigInt::from(3));
        assert!(m.per_edge.iter().all(|k| *k == BigInt::one()));
        assert!(m.is_valid_for(&fano()));

        let m = quasi_regular_multiplicities(&two_disjoint()).unwrap();
        assert_eq!(m.r, BigInt::one());
        assert_eq!(m.per_edge, vec![BigInt::one(), BigInt::one()]);

        let h = Hypergraph::new(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert_eq!(quasi_regular_multiplicities(&h), None);
    }

    #[test]
    fn non_uniform_weights_scale() {
        // 2-regular on six vertices
        let h = Hypergraph::new(6, [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]).unwrap();
        let m = quasi_regular_multiplicities(&h).unwrap();
        assert!(m.is_valid_for(&h));
    }
}
