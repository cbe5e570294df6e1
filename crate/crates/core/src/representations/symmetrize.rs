//! Tensor symmetrization of orthogonal representations.
//!
//! Given a t-dimensional representation and a collection of pairwise
//! disjoint k-tuples whose within-tuple inner products are all nonzero, the
//! construction produces a t^(k^2)-dimensional representation in which
//! cross-tuple non-orthogonality observed between the first vertex of one
//! tuple and the second of another spreads to every position pair.

use std::collections::HashSet;

use crate::combinatorics::UniformHypergraph;
use crate::error::{Error, Result};
use crate::exactalg::ExactVector;

use super::exact::ExactOrthogonalRepresentation;

/// Ordered k-tuples of distinct vertices, pairwise disjoint across tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCollection {
    k: usize,
    tuples: Vec<Vec<usize>>,
}

impl TupleCollection {
    pub fn new(k: usize, tuples: Vec<Vec<usize>>) -> Result<TupleCollection> {
        if k < 2 {
            return Err(Error::invalid("tuples must have arity at least 2"));
        }
        let mut seen = HashSet::new();
        for tuple in &tuples {
            if tuple.len() != k {
                return Err(Error::invalid(format!(
                    "tuple of length {} in a {k}-tuple collection",
                    tuple.len()
                )));
            }
            for &v in tuple {
                if !seen.insert(v) {
                    return Err(Error::invalid(format!(
                        "vertex {v} appears in two tuples (or twice in one)"
                    )));
                }
            }
        }
        Ok(TupleCollection { k, tuples })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }
}

/// Builds the symmetrized representation:
///
/// * the first vertex of a tuple `a` gets `(u_{a[1]} (x) ... (x) u_{a[k]})^{(x) k}`,
/// * the second gets `u_{a[1]}^{(x) k} (x) ... (x) u_{a[k]}^{(x) k}`,
/// * every other vertex gets `u_v^{(x) k^2}`.
///
/// Preconditions: `rep` matches `h`, and within every tuple all pairwise
/// inner products (including self) are nonzero; a violating tuple is
/// reported by index.
pub fn symmetrize(
    h: &UniformHypergraph,
    rep: &ExactOrthogonalRepresentation,
    tuples: &TupleCollection,
) -> Result<ExactOrthogonalRepresentation> {
    if rep.n() != h.n() {
        return Err(Error::mismatch("representation does not match hypergraph"));
    }
    let k = tuples.k();
    for (idx, tuple) in tuples.tuples().iter().enumerate() {
        if tuple.iter().any(|&v| v >= h.n()) {
            return Err(Error::invalid(format!("tuple {idx} has a vertex out of range")));
        }
        for (i, &u) in tuple.iter().enumerate() {
            for &w in &tuple[i..] {
                if rep.vector(u).inner_product(rep.vector(w))?.is_zero() {
                    return Err(Error::invalid(format!(
                        "tuple {idx} has orthogonal members {u} and {w}"
                    )));
                }
            }
        }
    }

    let ksq = k * k;
    let mut vectors: Vec<ExactVector> = rep
        .vectors()
        .iter()
        .map(|u| u.tensor_power(ksq))
        .collect::<Result<_>>()?;
    for tuple in tuples.tuples() {
        // Block of the whole tuple, repeated k times.
        let mut block = rep.vector(tuple[0]).clone();
        for &v in &tuple[1..] {
            block = block.tensor_product(rep.vector(v))?;
        }
        vectors[tuple[0]] = block.tensor_power(k)?;
        // k-th powers of the members, concatenated by tensor product.
        let mut second = rep.vector(tuple[0]).tensor_power(k)?;
        for &v in &tuple[1..] {
            second = second.tensor_product(&rep.vector(v).tensor_power(k)?)?;
        }
        vectors[tuple[1]] = second;
    }
    ExactOrthogonalRepresentation::new(rep.field(), vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Graph;
    use crate::exactalg::Field;
    use crate::representations::exact::verify_exact;

    #[test]
    fn tuple_collection_validation() {
        assert!(TupleCollection::new(2, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert!(TupleCollection::new(2, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(TupleCollection::new(2, vec![vec![0, 0]]).is_err());
        assert!(TupleCollection::new(2, vec![vec![0, 1, 2]]).is_err());
        assert!(TupleCollection::new(1, vec![]).is_err());
    }

    #[test]
    fn dimension_is_t_to_the_k_squared() {
        // Two disjoint edges, a 2-dimensional representation over GF(7).
        let f = Field::prime(7).unwrap();
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let h = UniformHypergraph::from_graph(&g);
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::unit(f, 2, 0),
                ExactVector::unit(f, 2, 1),
                ExactVector::unit(f, 2, 0),
                ExactVector::unit(f, 2, 1),
            ],
        )
        .unwrap();
        // Tuples must be pairwise non-orthogonal inside; (0,2) and (1,3)
        // pair up the parallel vectors.
        let tuples = TupleCollection::new(2, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let out = symmetrize(&h, &rep, &tuples).unwrap();
        assert_eq!(out.dim(), 2usize.pow(4));
        assert!(verify_exact(&h, &out).unwrap().is_valid());
    }

    #[test]
    fn paper_shape_for_pairs() {
        // For k = 2 and a tuple (a, b): w_a = (u_a (x) u_b)^{(x)2} and
        // w_b = u_a^{(x)2} (x) u_b^{(x)2}.
        let f = Field::prime(7).unwrap();
        let u_a = ExactVector::from_integers(f, &[1, 2]);
        let u_b = ExactVector::from_integers(f, &[3, 1]);
        let h = UniformHypergraph::edgeless(2, 2);
        let rep = ExactOrthogonalRepresentation::new(f, vec![u_a.clone(), u_b.clone()]).unwrap();
        let tuples = TupleCollection::new(2, vec![vec![0, 1]]).unwrap();
        let out = symmetrize(&h, &rep, &tuples).unwrap();
        let expected_a = u_a.tensor_product(&u_b).unwrap().tensor_power(2).unwrap();
        let expected_b = u_a
            .tensor_power(2)
            .unwrap()
            .tensor_product(&u_b.tensor_power(2).unwrap())
            .unwrap();
        assert_eq!(out.vector(0), &expected_a);
        assert_eq!(out.vector(1), &expected_b);
    }

    #[test]
    fn orthogonal_tuple_members_are_rejected() {
        let f = Field::prime(7).unwrap();
        let h = UniformHypergraph::edgeless(2, 2);
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![ExactVector::unit(f, 2, 0), ExactVector::unit(f, 2, 1)],
        )
        .unwrap();
        let tuples = TupleCollection::new(2, vec![vec![0, 1]]).unwrap();
        let err = symmetrize(&h, &rep, &tuples).unwrap_err();
        assert!(err.to_string().contains("tuple 0"));
    }
}
