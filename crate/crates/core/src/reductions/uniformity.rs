//! The copy-and-union uniformity reduction: lifts a k1-uniform hypergraph
//! to a k2-uniform one on ell copies of the vertex set while preserving the
//! orthogonality dimension over every field (constructively in the easy
//! direction, by the symmetrization/Ramsey argument in the other).

use crate::combinatorics::{binomial, UniformHypergraph};
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::representations::{verify_exact, ExactOrthogonalRepresentation};

use super::Provenance;

/// Output of the uniformity reduction with the derived parameters.
#[derive(Clone, Debug)]
pub struct UniformityReduction {
    pub output: UniformHypergraph,
    /// Number of copies picked per hyperedge, s = ceil(k2 / k1).
    pub s: usize,
    /// Number of vertex-set copies, binom(m^(k1^2) + s - 1, s - 1).
    pub ell: u64,
    pub input_n: usize,
    pub provenance: Provenance,
}

/// The number of copies `ell` for the given parameters.
pub fn uniformity_ell(k1: usize, k2: usize, m: u64) -> Result<u64> {
    let s = k2.div_ceil(k1) as u64;
    let base = m
        .checked_pow((k1 * k1) as u32)
        .ok_or_else(|| Error::capacity("m^(k1^2) overflows"))?;
    binomial(base + s - 1, s - 1).ok_or_else(|| Error::capacity("ell overflows u64"))
}

/// Builds the k2-uniform hypergraph: vertex set = ell copies of V(h1), copy
/// i holding global indices i*n .. i*n+n; hyperedges are unions of one full
/// h1-hyperedge from each of s-1 distinct copies plus a
/// (k2 - (s-1)k1)-subset of a hyperedge from one further copy.
pub fn uniformity_reduce(
    h1: &UniformHypergraph,
    k2: usize,
    m: u64,
    limits: &SearchLimits,
) -> Result<UniformityReduction> {
    let k1 = h1.k();
    if k2 < k1 {
        return Err(Error::invalid(format!(
            "target uniformity {k2} below input uniformity {k1}"
        )));
    }
    if m < 1 {
        return Err(Error::invalid("capacity parameter m must be at least 1"));
    }
    let s = k2.div_ceil(k1);
    let ell = uniformity_ell(k1, k2, m)?;
    let n_out = (h1.n() as u64)
        .checked_mul(ell)
        .ok_or_else(|| Error::capacity("output vertex count overflows"))?;
    if n_out > limits.reduction_vertices as u64 {
        return Err(Error::capacity(format!(
            "reduction would produce {n_out} vertices (ell = {ell}), above the ceiling {}",
            limits.reduction_vertices
        )));
    }
    let ell = ell as usize;
    let n1 = h1.n();
    let tail = k2 - (s - 1) * k1;
    // Rough hyperedge-count guard before enumerating.
    let per_copy = h1.m() as f64;
    let estimate = binomial(ell as u64, s as u64).unwrap_or(u64::MAX) as f64
        * (s as f64)
        * per_copy.powi(s as i32)
        * binomial(k1 as u64, tail as u64).unwrap_or(u64::MAX) as f64;
    if estimate > 20_000_000.0 {
        return Err(Error::capacity(format!(
            "reduction would enumerate ~{estimate:.2e} hyperedges"
        )));
    }

    let mut hyperedges = Vec::new();
    let copies: Vec<usize> = (0..ell).collect();
    let mut subset = vec![0usize; s];
    enumerate_subsets(&copies, s, &mut subset, 0, 0, &mut |chosen| {
        for (partial_pos, &partial_copy) in chosen.iter().enumerate() {
            let full_copies: Vec<usize> = chosen
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != partial_pos)
                .map(|(_, &c)| c)
                .collect();
            let mut full_choice = vec![0usize; full_copies.len()];
            enumerate_products(h1.m(), &mut full_choice, 0, &mut |full_edges| {
                for partial_edge in 0..h1.m() {
                    let edge_vertices = &h1.hyperedges()[partial_edge];
                    let mut tail_subset = vec![0usize; tail];
                    enumerate_subsets(
                        edge_vertices,
                        tail,
                        &mut tail_subset,
                        0,
                        0,
                        &mut |tail_vertices| {
                            let mut union =
                                Vec::with_capacity((s - 1) * k1 + tail);
                            for (&copy, &edge_idx) in full_copies.iter().zip(full_edges.iter()) {
                                for &v in &h1.hyperedges()[edge_idx] {
                                    union.push(copy * n1 + v);
                                }
                            }
                            for &v in tail_vertices {
                                union.push(partial_copy * n1 + v);
                            }
                            hyperedges.push(union);
                        },
                    );
                }
            });
        }
    });
    let output = UniformHypergraph::new(ell * n1, k2, hyperedges)?;
    let provenance = Provenance::new(
        "uniformity",
        format!("k1={k1} k2={k2} m={m} s={s} ell={ell}"),
        crate::reductions::digest_hypergraph(h1),
    );
    Ok(UniformityReduction {
        output,
        s,
        ell: ell as u64,
        input_n: n1,
        provenance,
    })
}

fn enumerate_subsets<T: Copy>(
    items: &[T],
    size: usize,
    scratch: &mut Vec<T>,
    filled: usize,
    start: usize,
    visit: &mut impl FnMut(&[T]),
) {
    if filled == size {
        visit(&scratch[..size]);
        return;
    }
    for i in start..items.len() {
        scratch[filled] = items[i];
        enumerate_subsets(items, size, scratch, filled + 1, i + 1, visit);
    }
}

fn enumerate_products(
    options: usize,
    scratch: &mut Vec<usize>,
    filled: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if filled == scratch.len() {
        visit(scratch);
        return;
    }
    for choice in 0..options {
        scratch[filled] = choice;
        enumerate_products(options, scratch, filled + 1, visit);
    }
}

/// Transports a representation of the input along the reduction by
/// assigning the same vectors to every copy; the result verifies on the
/// reduced hypergraph, witnessing od(H2) <= od(H1).
pub fn transport_uniformity_representation(
    h1: &UniformHypergraph,
    rep: &ExactOrthogonalRepresentation,
    reduction: &UniformityReduction,
) -> Result<ExactOrthogonalRepresentation> {
    if reduction.input_n != h1.n() {
        return Err(Error::mismatch("reduction built from a different input"));
    }
    let report = verify_exact(h1, rep)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!(
            "input representation invalid: {} isotropic vertices, {} bad hyperedges",
            report.isotropic_vertices.len(),
            report.unsatisfied_hyperedges.len()
        )));
    }
    let mut vectors = Vec::with_capacity(reduction.output.n());
    for _copy in 0..reduction.ell {
        for v in 0..h1.n() {
            vectors.push(rep.vector(v).clone());
        }
    }
    let out = ExactOrthogonalRepresentation::new(rep.field(), vectors)?;
    debug_assert!(verify_exact(&reduction.output, &out).unwrap().is_valid());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Graph;
    use crate::exactalg::{ExactVector, Field};

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn ell_formula() {
        // k1 = 2, k2 = 4: s = 2, ell = m^4 + 1.
        assert_eq!(uniformity_ell(2, 4, 2).unwrap(), 17);
        assert_eq!(uniformity_ell(2, 3, 1).unwrap(), 2);
        assert_eq!(uniformity_ell(2, 2, 5).unwrap(), 1);
    }

    #[test]
    fn triangle_to_four_uniform() {
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let red = uniformity_reduce(&triangle, 4, 2, &limits()).unwrap();
        assert_eq!(red.s, 2);
        assert_eq!(red.ell, 17);
        assert_eq!(red.output.n(), 51);
        assert_eq!(red.output.k(), 4);
    }

    #[test]
    fn identity_when_k2_equals_k1() {
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let red = uniformity_reduce(&triangle, 2, 3, &limits()).unwrap();
        assert_eq!(red.ell, 1);
        assert_eq!(red.output.n(), 3);
        assert_eq!(red.output.hyperedges(), triangle.hyperedges());
    }

    #[test]
    fn single_edge_to_three_uniform() {
        let k2_graph = UniformHypergraph::from_graph(&Graph::new(2, [(0, 1)]).unwrap());
        let red = uniformity_reduce(&k2_graph, 3, 1, &limits()).unwrap();
        assert_eq!((red.s, red.ell), (2, 2));
        assert_eq!(red.output.n(), 4);
        // One full edge from one copy plus one endpoint of the other.
        assert_eq!(red.output.m(), 4);
    }

    #[test]
    fn arity_is_exact_on_random_inputs() {
        use crate::rng::Rng;
        let mut rng = Rng::seed_from(99);
        for _ in 0..10 {
            let n = 3 + rng.next_usize_below(3);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let h = UniformHypergraph::from_graph(&Graph::new(n, edges).unwrap());
            let red = uniformity_reduce(&h, 3, 1, &limits()).unwrap();
            assert!(red.output.hyperedges().iter().all(|e| e.len() == 3));
        }
    }

    #[test]
    fn transport_produces_valid_representation() {
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let f = Field::prime(3).unwrap();
        let rep = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::unit(f, 3, 0),
                ExactVector::unit(f, 3, 1),
                ExactVector::unit(f, 3, 2),
            ],
        )
        .unwrap();
        let red = uniformity_reduce(&triangle, 4, 2, &limits()).unwrap();
        let transported = transport_uniformity_representation(&triangle, &rep, &red).unwrap();
        assert_eq!(transported.n(), 51);
        assert!(verify_exact(&red.output, &transported).unwrap().is_valid());
    }

    #[test]
    fn invalid_input_representation_is_rejected() {
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let f = Field::prime(3).unwrap();
        let bad = ExactOrthogonalRepresentation::new(
            f,
            vec![
                ExactVector::unit(f, 2, 0),
                ExactVector::unit(f, 2, 1),
                ExactVector::unit(f, 2, 0),
            ],
        )
        .unwrap();
        let red = uniformity_reduce(&triangle, 4, 1, &limits()).unwrap();
        assert!(transport_uniformity_representation(&triangle, &bad, &red).is_err());
    }

    #[test]
    fn capacity_ceiling_reports_ell() {
        let triangle = UniformHypergraph::from_graph(&Graph::complete(3));
        let tiny = SearchLimits {
            reduction_vertices: 10,
            ..SearchLimits::default()
        };
        let err = uniformity_reduce(&triangle, 4, 2, &tiny).unwrap_err();
        assert!(err.to_string().contains("ell = 17"), "{err}");
    }
}
