//! Topological formulas as computations: Zariski–Van Kampen presentations,
//! mapping-torus CW presentations, presentation-complex homology, wedge
//! homotopy types, orbifold kernel ranks, and the threshold-set poset.

mod cw;
mod homology;
mod orbifold_rank;
mod threshold;
mod wedge;
mod zvk;

pub use cw::{cw_fibration_presentation, MonodromyData};
pub use homology::{presentation_homology, HomologyReport};
pub use orbifold_rank::orbifold_kernel_rank;
pub use threshold::{threshold_minimal_sets, ThresholdInstance};
pub use wedge::{wedge_homotopy_type, WedgeMode, WedgeType};
pub use zvk::zvk_presentation;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("braid on {found} strands where {expected} expected")]
    StrandMismatch { expected: usize, found: usize },
    #[error("monodromy rank mismatch: {0}")]
    RankMismatch(String),
    #[error("inconsistent input: computed sphere count would be negative ({0})")]
    InconsistentInput(i64),
    #[error("kernel rank is not an integer (inconsistent input)")]
    NotInteger,
    #[error("{m} is not the lcm of the cone orders (expected {expected})")]
    BadLcm { m: u64, expected: u64 },
    #[error("threshold ground set has {0} values, exceeding the cap of 12")]
    GroundSetTooLarge(usize),
    #[error("threshold table has {found} entries, expected {expected}")]
    BadTableSize { expected: usize, found: usize },
    #[error("monotonicity violation: {set} is in the family but its superset {superset} is not")]
    MonotonicityViolation { set: String, superset: String },
}
