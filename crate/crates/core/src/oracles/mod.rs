//! Exact solvers used as ground truth.
//!
//! Each solver returns a witness together with its size, and each witness
//! kind has a stand-alone predicate so callers can re-check it. The solvers
//! are exhaustive (with branch-and-bound pruning) and meant for desk-scale
//! instances: at most 128 vertices after compaction, and in practice a few
//! dozen.

mod cover;
mod domination;
mod fractional;
mod matching;

pub use cover::{is_hitting_set, is_strong_independent_set, max_strong_independent_set, min_hitting_set};
pub use domination::{is_dominating_set, is_quasi_dominating_set, min_dominating_set, min_quasi_dominating_set};
pub use fractional::{
    fractional_cover, fractional_cover_in, quasi_regular_multiplicities, FractionalCover, Multiplicities,
};
pub use matching::{is_induced_matching, max_induced_matching};

use thiserror::Error;

use crate::bits::MAX_BITS;
use crate::hypergraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {actual} elements; exhaustive solvers stop at {limit}")]
    TooLarge { actual: usize, limit: usize },
    #[error("vertex {vertex} cannot be dominated by any allowed vertex")]
    Infeasible { vertex: Vertex },
}

/// Optimum value and a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<W> {
    pub size: usize,
    pub witness: W,
}

pub(crate) fn check_size(actual: usize) -> Result<(), OracleError> {
    if actual > MAX_BITS {
        Err(OracleError::TooLarge { actual, limit: MAX_BITS })
    } else {
        Ok(())
    }
}
