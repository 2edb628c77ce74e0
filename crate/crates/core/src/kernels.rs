//! Counting kernels for quasi-regularizable and bounded-degree hypergraphs,
//! and the duality arithmetic relating kernel constants of a problem and its
//! parametric dual.

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Instance, Problem, Vertex};
use crate::oracles::quasi_regular_multiplicities;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundUnit {
    Vertices,
    Edges,
}

/// Kernel size promised by a theorem, in its own unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimedBound {
    pub value: usize,
    pub unit: BoundUnit,
    /// Set when the implementation does not guarantee the bound and it is only
    /// measured.
    pub empirical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelStats {
    pub n: usize,
    pub m: usize,
    pub bound: ClaimedBound,
}

impl KernelStats {
    fn of(inst: &Instance, bound: ClaimedBound) -> Self {
        KernelStats { n: inst.hypergraph.n(), m: inst.hypergraph.m(), bound }
    }

    pub fn within_bound(&self) -> bool {
        match self.bound.unit {
            BoundUnit::Vertices => self.n <= self.bound.value,
            BoundUnit::Edges => self.m <= self.bound.value,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum KernelOutcome {
    Decided { answer: Answer, reason: String },
    Kernel { instance: Instance, forced: Vec<Vertex>, stats: KernelStats },
}

impl KernelOutcome {
    pub fn is_decided(&self) -> bool {
        matches!(self, KernelOutcome::Decided { .. })
    }

    /// The answer to the original question, using `solve` on an undecided
    /// kernel. Forced vertices already count against the original `k`, so
    /// the kernel's own parameter is the right one to ask `solve` about.
    pub fn implied_answer(&self, solve: impl FnOnce(&Instance) -> bool) -> Answer {
        match self {
            KernelOutcome::Decided { answer, .. } => *answer,
            KernelOutcome::Kernel { instance, .. } => Answer::from_bool(solve(instance)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("this kernel answers {expected} instances")]
    WrongProblem { expected: Problem },
    #[error("hypergraph is not quasi-regularizable")]
    NotQuasiRegularizable,
    #[error("hypergraph is not 3-uniform")]
    NotUniform,
    #[error("maximum degree {max_degree} exceeds d = {d}")]
    DegreeExceeded { max_degree: usize, d: usize },
    #[error("incidence graph is not planar")]
    NotPlanar,
    #[error("reduction did not settle within {limit} rule applications")]
    IterationCeiling { limit: usize },
    #[error("duality constant {alpha_d} is not greater than 1")]
    DegenerateConstant { alpha_d: String },
}

fn require(inst: &Instance, problem: Problem) -> Result<(), KernelError> {
    if inst.problem == problem {
        Ok(())
    } else {
        Err(KernelError::WrongProblem { expected: problem })
    }
}

fn require_degree(inst: &Instance, d: usize) -> Result<(), KernelError> {
    let max_degree = inst.hypergraph.max_degree();
    if max_degree > d {
        Err(KernelError::DegreeExceeded { max_degree, d })
    } else {
        Ok(())
    }
}

fn unchanged(inst: &Instance, bound: ClaimedBound) -> KernelOutcome {
    KernelOutcome::Kernel { instance: inst.clone(), forced: Vec::new(), stats: KernelStats::of(inst, bound) }
}

/// Vertex cover on a quasi-regularizable 3-uniform hypergraph: `τ ≥ τ* = n/3`,
/// so more than `3k` vertices means no.
pub fn kernelize_quasi_regular(inst: &Instance) -> Result<KernelOutcome, KernelError> {
    require(inst, Problem::VertexCover)?;
    let h = &inst.hypergraph;
    if !h.is_uniform() {
        return Err(KernelError::NotUniform);
    }
    if quasi_regular_multiplicities(h).is_none() {
        return Err(KernelError::NotQuasiRegularizable);
    }
    let cap = 3 * inst.k;
    if h.n() > cap {
        return Ok(KernelOutcome::Decided {
            answer: Answer::No,
            reason: format!("fractional cover n/3 = {}/3 exceeds k = {}", h.n(), inst.k),
        });
    }
    Ok(unchanged(inst, ClaimedBound { value: cap, unit: BoundUnit::Vertices, empirical: false }))
}

/// Vertex cover with maximum degree `d`: every cover vertex hits at most `d`
/// edges, so more than `dk` edges means no.
pub fn kernelize_vc_bounded_degree(inst: &Instance, d: usize) -> Result<KernelOutcome, KernelError> {
    require(inst, Problem::VertexCover)?;
    require_degree(inst, d)?;
    let cap = d * inst.k;
    if inst.hypergraph.m() > cap {
        return Ok(KernelOutcome::Decided {
            answer: Answer::No,
            reason: format!("{} edges exceed d·k = {}", inst.hypergraph.m(), cap),
        });
    }
    Ok(unchanged(inst, ClaimedBound { value: cap, unit: BoundUnit::Edges, empirical: false }))
}

/// Strong independent set of size at least `k` with maximum degree `d`.
///
/// Choosing a vertex rules out at most `(2d+1)d` edges, so greedy selection
/// succeeds more than `k` times once `m > (2d+1)dk`.
pub fn kernelize_is_bounded_degree(inst: &Instance, d: usize) -> Result<KernelOutcome, KernelError> {
    require(inst, Problem::IndependentSet)?;
    require_degree(inst, d)?;
    let cap = (2 * d + 1) * d * inst.k;
    if inst.hypergraph.m() > cap {
        return Ok(KernelOutcome::Decided {
            answer: Answer::Yes,
            reason: format!("{} edges exceed (2d+1)·d·k = {}", inst.hypergraph.m(), cap),
        });
    }
    Ok(unchanged(inst, ClaimedBound { value: cap, unit: BoundUnit::Edges, empirical: false }))
}

/// `k_d = n − k`, with the vertex count as size function.
pub fn dual_parameter(inst: &Instance) -> usize {
    inst.hypergraph.n() - inst.k
}

/// Smallest kernel constant `α` compatible with a dual kernel of constant
/// `α_d` unless P = NP: the product `(α − 1)(α_d − 1)` must reach 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DualityBound<T> {
    pub alpha_d: T,
    pub lower_bound: T,
    /// Whether a supplied `α` clears the lower bound.
    pub consistent: Option<bool>,
}

impl<T: Scalar> DualityBound<T> {
    pub fn with_alpha(mut self, alpha: &T) -> Self {
        self.consistent = Some(*alpha >= self.lower_bound);
        self
    }

    /// `(lower_bound − 1)(α_d − 1)`, exactly 1 over exact scalars.
    pub fn product(&self) -> T {
        (self.lower_bound.clone() - T::one()) * (self.alpha_d.clone() - T::one())
    }
}

pub fn duality_lower_bound<T: Scalar>(alpha_d: T) -> Result<DualityBound<T>, KernelError> {
    if !(alpha_d.clone() - T::one()).definitely_positive() {
        return Err(KernelError::DegenerateConstant { alpha_d: alpha_d.to_string() });
    }
    let lower_bound = alpha_d.clone() / (alpha_d.clone() - T::one());
    Ok(DualityBound { alpha_d, lower_bound, consistent: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;
    use crate::hypergraph::Hypergraph;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn disjoint(count: usize) -> Hypergraph {
        Hypergraph::new(3 * count, (0..count).map(|i| [3 * i, 3 * i + 1, 3 * i + 2])).unwrap()
    }

    #[test]
    fn quasi_regular_examples() {
        let out = kernelize_quasi_regular(&Instance::vertex_cover(fano(), 3).unwrap()).unwrap();
        match out {
            KernelOutcome::Kernel { stats, .. } => {
                assert_eq!(stats.n, 7);
                assert!(stats.within_bound());
            }
            other => panic!("{other:?}"),
        }
        let out = kernelize_quasi_regular(&Instance::vertex_cover(fano(), 2).unwrap()).unwrap();
        assert!(matches!(out, KernelOutcome::Decided { answer: Answer::No, .. }));
        let h = Hypergraph::new(5, [[0, 1, 2], [0, 3, 4]]).unwrap();
        assert_eq!(
            kernelize_quasi_regular(&Instance::vertex_cover(h, 2).unwrap()),
            Err(KernelError::NotQuasiRegularizable)
        );
    }

    #[test]
    fn vc_bounded_degree_examples() {
        let no = kernelize_vc_bounded_degree(&Instance::vertex_cover(fano(), 2).unwrap(), 3).unwrap();
        assert!(matches!(no, KernelOutcome::Decided { answer: Answer::No, .. }));
        let kernel = kernelize_vc_bounded_degree(&Instance::vertex_cover(fano(), 3).unwrap(), 3).unwrap();
        assert!(!kernel.is_decided());
        let empty = Hypergraph::new(0, Vec::<Vec<usize>>::new()).unwrap();
        let kernel = kernelize_vc_bounded_degree(&Instance::vertex_cover(empty, 0).unwrap(), 1).unwrap();
        assert!(!kernel.is_decided());
        assert_eq!(
            kernelize_vc_bounded_degree(&Instance::vertex_cover(fano(), 3).unwrap(), 2),
            Err(KernelError::DegreeExceeded { max_degree: 3, d: 2 })
        );
    }

    #[test]
    fn is_bounded_degree_examples() {
        let out = kernelize_is_bounded_degree(&Instance::independent_set(disjoint(3), 1).unwrap(), 1).unwrap();
        match out {
            KernelOutcome::Kernel { stats, .. } => assert_eq!((stats.m, stats.bound.value), (3, 3)),
            other => panic!("{other:?}"),
        }
        let out = kernelize_is_bounded_degree(&Instance::independent_set(disjoint(4), 1).unwrap(), 1).unwrap();
        assert!(matches!(out, KernelOutcome::Decided { answer: Answer::Yes, .. }));
        let out = kernelize_is_bounded_degree(&Instance::independent_set(fano(), 1).unwrap(), 3).unwrap();
        assert!(!out.is_decided());
        assert_eq!(
            kernelize_is_bounded_degree(&Instance::vertex_cover(fano(), 1).unwrap(), 3),
            Err(KernelError::WrongProblem { expected: Problem::IndependentSet })
        );
    }

    #[test]
    fn dual_parameter_examples() {
        assert_eq!(dual_parameter(&Instance::vertex_cover(fano(), 3).unwrap()), 4);
        assert_eq!(dual_parameter(&Instance::vertex_cover(fano(), 0).unwrap()), 7);
        assert_eq!(dual_parameter(&Instance::vertex_cover(fano(), 7).unwrap()), 0);
    }

    #[test]
    fn duality_constants() {
        for (a, (n, d)) in [(40, (40, 39)), (67, (67, 66)), (21, (21, 20)), (3, (3, 2))] {
            let b = duality_lower_bound(q(a, 1)).unwrap();
            assert_eq!(b.lower_bound, q(n, d));
            assert_eq!(b.product(), q(1, 1));
            let back = duality_lower_bound(b.lower_bound.clone()).unwrap();
            assert_eq!(back.lower_bound, q(a, 1));
        }
        // (2d²+d)/(2d²+d−1) and d/(d−1) at d = 3
        let d = 3;
        assert_eq!(duality_lower_bound(q(2 * d * d + d, 1)).unwrap().lower_bound, q(21, 20));
        assert_eq!(duality_lower_bound(q(d, 1)).unwrap().lower_bound, q(d, d - 1));
    }

    #[test]
    fn degenerate_and_consistency() {
        assert!(duality_lower_bound(q(1, 1)).is_err());
        assert!(duality_lower_bound(q(1, 2)).is_err());
        let b = duality_lower_bound(q(40, 1)).unwrap();
        assert_eq!(b.clone().with_alpha(&q(2, 1)).consistent, Some(true));
        assert_eq!(b.with_alpha(&q(1, 1)).consistent, Some(false));
        let f = duality_lower_bound(3.0f64).unwrap();
        assert!((f.lower_bound - 1.5).abs() < 1e-12);
    }
}
