use crate::combinatorics::{Graph, UniformHypergraph, VertexColoring};
use crate::error::{Error, Result};

use super::exact::VerificationReport;

pub const DEFAULT_EPS_ORTH: f64 = 1e-9;
pub const DEFAULT_EPS_NZ: f64 = 1e-6;

/// A real-valued orthogonal representation with explicit tolerances:
/// self-inner-products must stay at least `eps_nz` in absolute value, and a
/// pair counts as orthogonal when its inner product is at most `eps_orth`
/// in absolute value.
#[derive(Clone, Debug)]
pub struct RealOrthogonalRepresentation {
    dim: usize,
    vectors: Vec<Vec<f64>>,
    pub eps_orth: f64,
    pub eps_nz: f64,
}

impl RealOrthogonalRepresentation {
    pub fn new(
        vectors: Vec<Vec<f64>>,
        eps_orth: f64,
        eps_nz: f64,
    ) -> Result<RealOrthogonalRepresentation> {
        let dim = vectors.first().map(|v| v.len()).unwrap_or(0);
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::mismatch("vectors of different dimensions"));
        }
        Ok(RealOrthogonalRepresentation {
            dim,
            vectors,
            eps_orth,
            eps_nz,
        })
    }

    pub fn with_default_tolerances(vectors: Vec<Vec<f64>>) -> Result<RealOrthogonalRepresentation> {
        RealOrthogonalRepresentation::new(vectors, DEFAULT_EPS_ORTH, DEFAULT_EPS_NZ)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vector(&self, v: usize) -> &[f64] {
        &self.vectors[v]
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn inner(&self, u: usize, v: usize) -> f64 {
        dot(&self.vectors[u], &self.vectors[v])
    }

    pub fn orthogonal(&self, u: usize, v: usize) -> bool {
        self.inner(u, v).abs() <= self.eps_orth
    }

    /// Verification against a hypergraph, same report shape as the exact
    /// layer.
    pub fn verify(&self, h: &UniformHypergraph) -> Result<VerificationReport> {
        if self.n() != h.n() {
            return Err(Error::mismatch(format!(
                "representation on {} vertices against a hypergraph on {}",
                self.n(),
                h.n()
            )));
        }
        let mut report = VerificationReport::default();
        for v in 0..self.n() {
            if self.inner(v, v).abs() < self.eps_nz {
                report.isotropic_vertices.push(v);
            }
        }
        for (idx, edge) in h.hyperedges().iter().enumerate() {
            let mut satisfied = false;
            'pairs: for (i, &u) in edge.iter().enumerate() {
                for &w in &edge[i + 1..] {
                    if self.orthogonal(u, w) {
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

    pub fn verify_on_graph(&self, g: &Graph) -> Result<VerificationReport> {
        self.verify(&UniformHypergraph::from_graph(g))
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The unit-vector representation induced by a proper coloring: dimension
/// equals the palette size and vertex `v` gets the unit vector of its color.
pub fn representation_from_coloring(
    h: &UniformHypergraph,
    coloring: &VertexColoring,
) -> Result<RealOrthogonalRepresentation> {
    if coloring.len() != h.n() {
        return Err(Error::mismatch("coloring and hypergraph sizes differ"));
    }
    if let Some(edge) = coloring.violating_hyperedge(h) {
        return Err(Error::Verification(format!(
            "coloring is monochromatic on hyperedge {edge}"
        )));
    }
    let t = coloring.palette().max(1);
    let vectors = coloring
        .colors()
        .iter()
        .map(|&c| {
            let mut v = vec![0.0; t];
            v[c] = 1.0;
            v
        })
        .collect();
    RealOrthogonalRepresentation::with_default_tolerances(vectors)
}

/// The sign-pattern coloring of a representation: vertex `v` is colored by
/// the vector of signs of its entries (entries within `eps_orth` of zero
/// count as zero), so the palette never exceeds 3^t. Distinct patterns get
/// color indices in first-seen order.
pub fn coloring_from_representation(
    h: &UniformHypergraph,
    rep: &RealOrthogonalRepresentation,
) -> Result<VertexColoring> {
    let report = rep.verify(h)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!(
            "representation invalid: {} isotropic vertices, {} unsatisfied hyperedges",
            report.isotropic_vertices.len(),
            report.unsatisfied_hyperedges.len()
        )));
    }
    let mut patterns: Vec<Vec<i8>> = Vec::new();
    let mut colors = Vec::with_capacity(rep.n());
    for v in 0..rep.n() {
        let pattern: Vec<i8> = rep
            .vector(v)
            .iter()
            .map(|&x| {
                if x.abs() <= rep.eps_orth {
                    0
                } else if x > 0.0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let color = match patterns.iter().position(|p| *p == pattern) {
            Some(i) => i,
            None => {
                patterns.push(pattern);
                patterns.len() - 1
            }
        };
        colors.push(color);
    }
    let coloring = VertexColoring::new(colors, patterns.len().max(1))?;
    // Orthogonal nonzero vectors have distinct sign patterns exactly; with
    // tolerances the conclusion is checked rather than assumed.
    if !coloring.is_proper_on_hypergraph(h) {
        return Err(Error::Verification(
            "sign-pattern coloring is not proper at these tolerances".into(),
        ));
    }
    Ok(coloring)
}

/// The +-1 representation of the Frankl-Rodl-type graph: vertex A (a
/// t/2-subset of [t]) gets the vector with +1 on A and -1 elsewhere.
/// Adjacent vertices meet in exactly t/4 elements, so inner products vanish
/// exactly and the representation verifies with zero tolerance.
pub fn frankl_rodl_representation(t: u32) -> Result<RealOrthogonalRepresentation> {
    let g = crate::combinatorics::frankl_rodl_graph(t)?;
    let masks = crate::combinatorics::subset_vertices(t, t / 2);
    debug_assert_eq!(masks.len(), g.n());
    let vectors: Vec<Vec<f64>> = masks
        .iter()
        .map(|&mask| {
            (0..t)
                .map(|i| if mask >> i & 1 == 1 { 1.0 } else { -1.0 })
                .collect()
        })
        .collect();
    let rep = RealOrthogonalRepresentation::new(vectors, 0.0, DEFAULT_EPS_NZ)?;
    let report = rep.verify_on_graph(&g)?;
    debug_assert!(report.is_valid());
    Ok(rep)
}
