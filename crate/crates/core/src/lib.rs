//! Orthogonal representations of graphs and hypergraphs.
//!
//! A `t`-dimensional orthogonal representation assigns to every vertex a
//! vector with nonzero self-inner-product such that every hyperedge contains
//! two vertices whose vectors are orthogonal; the orthogonality dimension is
//! the least such `t`. This crate provides:
//!
//! * exact combinatorial oracles (chromatic number, independence number,
//!   multichromatic numbers, hypergraph 2-colorability) and the graph
//!   families these quantities are usually probed on,
//! * exact linear algebra over prime fields and the rationals,
//! * representation verification, a finite-field orthogonality-dimension
//!   search, coloring/representation conversions, tensor symmetrization,
//!   and sandwich bounds on the orthogonality dimension,
//! * the uniformity, lexicographic-product, and Label Cover reductions with
//!   constructive completeness and soundness procedures,
//! * a semidefinite-programming engine for (strict) vector chromatic
//!   numbers with hyperplane-rounding extraction of independent sets, and
//! * a coloring algorithm for graphs promised to have small orthogonality
//!   dimension.

pub mod coloring;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod limits;
pub mod reductions;
pub mod representations;
pub mod rng;
pub mod sdp;

pub use error::{Error, Result};
pub use limits::SearchLimits;
