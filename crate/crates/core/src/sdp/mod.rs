//! Semidefinite-programming engine: vector and strict vector chromatic
//! numbers by bisection with Dykstra alternating projections, plus
//! hyperplane rounding into independent sets.

pub mod eigen;
pub mod format;
mod gram;
mod rounding;
mod solver;

pub use gram::GramMatrix;
pub use rounding::kms_independent_set;
pub use solver::{
    strict_vector_chromatic, vector_chromatic, vector_chromatic_feasible_at, EdgeConstraint,
    SdpConfig, VcOutcome, VectorColoring,
};
