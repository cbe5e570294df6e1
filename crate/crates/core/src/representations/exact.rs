use crate::combinatorics::UniformHypergraph;
use crate::error::{Error, Result};
use crate::exactalg::{ExactVector, Field};

/// An assignment of exact vectors of a common dimension to the vertices of a
/// hypergraph. Validity (nonzero self-inner-products, an orthogonal pair in
/// every hyperedge) is checked by [`verify_exact`], not by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOrthogonalRepresentation {
    field: Field,
    dim: usize,
    vectors: Vec<ExactVector>,
}

impl ExactOrthogonalRepresentation {
    pub fn new(field: Field, vectors: Vec<ExactVector>) -> Result<ExactOrthogonalRepresentation> {
        let dim = vectors.first().map(|v| v.dim()).unwrap_or(0);
        for v in &vectors {
            if v.field() != field {
                return Err(Error::mismatch("vector from a different field"));
            }
            if v.dim() != dim {
                return Err(Error::mismatch("vectors of different dimensions"));
            }
        }
        Ok(ExactOrthogonalRepresentation {
            field,
            dim,
            vectors,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vector(&self, v: usize) -> &ExactVector {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    pub fn orthogonal(&self, u: usize, v: usize) -> bool {
        self.vectors[u]
            .inner_product(&self.vectors[v])
            .expect("uniform representation")
            .is_zero()
    }
}

/// Outcome of verifying a representation against a hypergraph: the vertices
/// whose vectors are isotropic and the hyperedges with no orthogonal pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub isotropic_vertices: Vec<usize>,
    pub unsatisfied_hyperedges: Vec<usize>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.isotropic_vertices.is_empty() && self.unsatisfied_hyperedges.is_empty()
    }
}

/// Checks that every vertex vector has nonzero self-inner-product and every
/// hyperedge contains two vertices with orthogonal vectors.
pub fn verify_exact(
    h: &UniformHypergraph,
    rep: &ExactOrthogonalRepresentation,
) -> Result<VerificationReport> {
    if rep.n() != h.n() {
        return Err(Error::mismatch(format!(
            "representation on {} vertices against a hypergraph on {}",
            rep.n(),
            h.n()
        )));
    }
    let mut report = VerificationReport::default();
    for (v, vec) in rep.vectors.iter().enumerate() {
        if vec.is_isotropic() {
            report.isotropic_vertices.push(v);
        }
    }
    for (idx, edge) in h.hyperedges().iter().enumerate() {
        let mut satisfied = false;
        'pairs: for (i, &u) in edge.iter().enumerate() {
            for &w in &edge[i + 1..] {
                if rep.orthogonal(u, w) {
                    satisfied = true;
                    break 'pairs;
                }
            }
        }
        if !satisfied {
            report.unsatisfied_hyperedges.push(idx);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Graph;

    fn k2() -> UniformHypergraph {
        UniformHypergraph::from_graph(&Graph::new(2, [(0, 1)]).unwrap())
    }

    #[test]
    fn unit_vectors_on_an_edge_are_valid() {
        let f = Field::Rational;
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![ExactVector::unit(f, 2, 0), ExactVector::unit(f, 2, 1)],
        )
        .unwrap();
        let report = verify_exact(&k2(), &rep).unwrap();
        assert!(report.is_valid());
    }

    #[test]
    fn equal_vectors_on_an_edge_are_invalid() {
        let f = Field::Rational;
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![ExactVector::unit(f, 2, 0), ExactVector::unit(f, 2, 0)],
        )
        .unwrap();
        let report = verify_exact(&k2(), &rep).unwrap();
        assert_eq!(report.unsatisfied_hyperedges, vec![0]);
        assert!(!report.is_valid());
    }

    #[test]
    fn triangle_with_one_repeated_vector() {
        let f = Field::Rational;
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::unit(f, 2, 0),
                ExactVector::unit(f, 2, 1),
                ExactVector::unit(f, 2, 0),
            ],
        )
        .unwrap();
        let report = verify_exact(&triangle, &rep).unwrap();
        // Edge {0,2} carries two equal unit vectors.
        assert_eq!(report.unsatisfied_hyperedges.len(), 1);
    }

    #[test]
    fn isotropic_vectors_are_reported() {
        let f = Field::prime(2).unwrap();
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::from_integers(f, &[1, 1]),
                ExactVector::from_integers(f, &[1, 0]),
            ],
        )
        .unwrap();
        let report = verify_exact(&k2(), &rep).unwrap();
        assert_eq!(report.isotropic_vertices, vec![0]);
    }

    #[test]
    fn index_mismatch_is_an_error() {
        let f = Field::Rational;
        let rep =
            ExactOrthogonalRepresentation::new(f, vec![ExactVector::unit(f, 2, 0)]).unwrap();
        assert!(verify_exact(&k2(), &rep).is_err());
    }
}
