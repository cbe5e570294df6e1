//! The lexicographic-product reduction: maps an input graph G to F . G for
//! a fixed pattern graph F. The orthogonality dimension of the product is
//! the subspace parameter od_k(F) at k = od(G), which is what makes the
//! construction a hardness gadget.

use crate::combinatorics::{lexicographic_product, Graph};
use crate::error::Result;

use super::Provenance;

#[derive(Clone, Debug)]
pub struct LexicographicReduction {
    pub output: Graph,
    pub provenance: Provenance,
}

pub fn lexicographic_reduce(pattern: &Graph, input: &Graph) -> Result<LexicographicReduction> {
    let output = lexicographic_product(pattern, input)?;
    let digest = format!(
        "{}+{}",
        super::digest_graph(pattern),
        super::digest_graph(input)
    );
    let provenance = Provenance::new(
        "lexicographic",
        format!(
            "pattern_n={} pattern_m={} input_n={} input_m={}",
            pattern.n(),
            pattern.m(),
            input.n(),
            input.m()
        ),
        digest,
    );
    Ok(LexicographicReduction { output, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_k2_gives_k6() {
        let red = lexicographic_reduce(&Graph::complete(3), &Graph::complete(2)).unwrap();
        assert_eq!(red.output, Graph::complete(6));
        assert_eq!(red.provenance.name, "lexicographic");
    }

    #[test]
    fn single_vertex_is_identity() {
        let f = Graph::cycle(5);
        let red = lexicographic_reduce(&f, &Graph::empty(1)).unwrap();
        assert_eq!(red.output, f);
    }

    #[test]
    fn c5_k2_counts() {
        let red = lexicographic_reduce(&Graph::cycle(5), &Graph::complete(2)).unwrap();
        assert_eq!((red.output.n(), red.output.m()), (10, 25));
    }
}
