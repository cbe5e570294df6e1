//! Graph and hypergraph data structures, the graph families used throughout
//! the crate, and exact brute-force oracles for chromatic-type invariants.
//!
//! All values are immutable after construction and safe to share read-only.

mod coloring;
mod exact;
pub mod format;
pub mod generators;
mod graph;
mod hypergraph;
mod twocolor;

pub use coloring::{TupleColoring, VertexColoring};
pub use exact::{
    chromatic_number_exact, greedy_coloring, hypergraph_chromatic_number_exact,
    independence_number_exact, max_clique, multichromatic_number_exact, try_coloring,
};
pub use generators::{
    binomial, frankl_rodl_graph, kneser_graph, lexicographic_product, schrijver_graph,
    stable_subset_vertices, subset_vertices,
};
pub use graph::Graph;
pub use hypergraph::UniformHypergraph;
pub use twocolor::{is_two_colorable, two_color_neighborhood, NeighborhoodColoring};
