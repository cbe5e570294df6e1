//! The three reductions: uniformity lifting for hypergraphs, lexicographic
//! products for graphs, and Label Cover to 4-uniform hypergraphs with the
//! completeness/soundness machinery.

pub mod format;
mod labelcover;
mod lexi;
mod uniformity;

pub use labelcover::{
    completeness_coloring, label_cover_bruteforce_opt, label_cover_to_hypergraph,
    label_cover_value, pigeonhole_element, soundness_decode, toy_label_cover, Assignment,
    BlockDirectory, DecodableRep, DecodedAssignment, LabelCoverInstance, SatisfactionStats,
    ToyInstance, ToyKind, ToyParams,
};
pub use lexi::{lexicographic_reduce, LexicographicReduction};
pub use uniformity::{
    transport_uniformity_representation, uniformity_ell, uniformity_reduce, UniformityReduction,
};

/// Provenance attached to every reduction output: which reduction ran, with
/// which parameters, on an input identified by digest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub name: String,
    pub params: String,
    pub input_digest: String,
}

impl Provenance {
    pub fn new(name: &str, params: String, input_digest: String) -> Provenance {
        Provenance {
            name: name.to_string(),
            params,
            input_digest,
        }
    }

    /// Rendered as a comment line for the text formats.
    pub fn comment(&self) -> String {
        format!(
            "c provenance reduction={} {} input={}",
            self.name, self.params, self.input_digest
        )
    }
}

/// FNV-1a over a canonical byte rendering; stable across runs.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

pub fn digest_graph(g: &crate::combinatorics::Graph) -> String {
    format!(
        "fnv1a:{:016x}",
        fnv1a(crate::combinatorics::format::write_graph(g).as_bytes())
    )
}

pub fn digest_hypergraph(h: &crate::combinatorics::UniformHypergraph) -> String {
    format!(
        "fnv1a:{:016x}",
        fnv1a(crate::combinatorics::format::write_hypergraph(h).as_bytes())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_are_stable_and_distinguish() {
        let g1 = crate::combinatorics::Graph::cycle(5);
        let g2 = crate::combinatorics::Graph::cycle(6);
        assert_eq!(digest_graph(&g1), digest_graph(&g1));
        assert_ne!(digest_graph(&g1), digest_graph(&g2));
    }
}
