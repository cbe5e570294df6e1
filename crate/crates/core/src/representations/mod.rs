//! Orthogonal representations: exact and real variants, verification, the
//! finite-field orthogonality-dimension search, conversions to and from
//! colorings, tensor symmetrization, the Ramsey/sparsity matrix lemmas,
//! subspace representations, and sandwich bounds.

mod exact;
pub mod format;
mod matrix_lemmas;
mod od_search;
mod real;
mod sandwich;
mod subspace;
mod symmetrize;

pub use exact::{verify_exact, ExactOrthogonalRepresentation, VerificationReport};
pub use matrix_lemmas::{erdos_szekeres_bound, grw_check, ramsey_clique, GrwReport};
pub use od_search::{od_at_most_two, od_exact_finite_field};
pub use real::{
    coloring_from_representation, frankl_rodl_representation, representation_from_coloring,
    RealOrthogonalRepresentation, DEFAULT_EPS_NZ, DEFAULT_EPS_ORTH,
};
pub use sandwich::{
    od_sandwich, od_sandwich_graph, od_sandwich_hypergraph, OdSandwich, OdSandwichOptions,
    SandwichInstance,
};
pub use subspace::{compose_lexicographic, verify_subspace, SubspaceReport, SubspaceRepresentation};
pub use symmetrize::{symmetrize, TupleCollection};
