//! Kernelization toolkit for vertex cover (3-hitting set) on 3-uniform
//! hypergraphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergraph`]: hypergraphs, instances and the elementary simplifications
//!   (isolated vertices, unit edges, domination detection).
//! * [`graph`] and [`planarity`]: the bipartite incidence graph, the local
//!   complete graph, neighbourhood partitions and a certifying planarity test.
//! * [`lp`] and [`oracles`]: an exact simplex generic over the scalar type and
//!   exhaustive solvers used as ground truth.
//! * [`kernels`]: the quasi-regular and bounded-degree kernels plus the
//!   parametric duality arithmetic.
//! * [`planar`]: the colored dominating-set reduction of the local complete
//!   graph and reconstruction of the reduced hypergraph.
//! * [`harness`]: file format, seeded generators and the oracle-checked
//!   verification driver.
//!
//! Numeric code is generic over [`Scalar`]; the aliases below pin the exact
//! instantiations used throughout the kernels.

pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod kernels;
pub mod lp;
pub mod oracles;
pub mod planar;
pub mod planarity;
pub mod scalar;

mod bits;

pub use graph::{
    incidence_graph, local_complete_graph, neighborhood_partition, BipartiteIncidenceGraph,
    LocalCompleteGraph, Partition3, Side, SimpleGraph,
};
pub use hypergraph::{Edge, Hypergraph, HypergraphError, Instance, Problem, Vertex};
pub use kernels::{DualityBound, KernelError, KernelOutcome};
pub use planarity::{planarity, Planarity};
pub use scalar::Scalar;

/// Arbitrary precision rational used by every exact LP path.
pub type Rational = num_rational::BigRational;

/// Fractional cover solved in exact arithmetic.
pub type ExactFractionalCover = oracles::FractionalCover<Rational>;

/// Fractional cover solved in double precision, for quick diagnostics only.
pub type FloatFractionalCover = oracles::FractionalCover<f64>;

/// Duality bound over exact rationals.
pub type ExactDualityBound = kernels::DualityBound<Rational>;
