//! Orthogonal k-subspace representations: every vertex carries a
//! k-dimensional subspace of R^t, orthogonal across edges.

use crate::combinatorics::{lexicographic_product, Graph};
use crate::error::{Error, Result};

use super::real::{dot, RealOrthogonalRepresentation, DEFAULT_EPS_NZ, DEFAULT_EPS_ORTH};

/// Per-vertex bases of k-dimensional subspaces of R^t.
#[derive(Clone, Debug)]
pub struct SubspaceRepresentation {
    ambient: usize,
    k: usize,
    bases: Vec<Vec<Vec<f64>>>,
    pub eps_orth: f64,
    pub eps_nz: f64,
}

impl SubspaceRepresentation {
    pub fn new(
        ambient: usize,
        k: usize,
        bases: Vec<Vec<Vec<f64>>>,
        eps_orth: f64,
        eps_nz: f64,
    ) -> Result<SubspaceRepresentation> {
        if k == 0 {
            return Err(Error::invalid("subspace dimension k must be positive"));
        }
        for (v, basis) in bases.iter().enumerate() {
            if basis.len() != k {
                return Err(Error::mismatch(format!(
                    "vertex {v} has {} basis vectors, expected {k}",
                    basis.len()
                )));
            }
            if basis.iter().any(|b| b.len() != ambient) {
                return Err(Error::mismatch(format!(
                    "vertex {v} has a basis vector of the wrong dimension"
                )));
            }
        }
        Ok(SubspaceRepresentation {
            ambient,
            k,
            bases,
            eps_orth,
            eps_nz,
        })
    }

    pub fn with_default_tolerances(
        ambient: usize,
        k: usize,
        bases: Vec<Vec<Vec<f64>>>,
    ) -> Result<SubspaceRepresentation> {
        SubspaceRepresentation::new(ambient, k, bases, DEFAULT_EPS_ORTH, DEFAULT_EPS_NZ)
    }

    /// Coordinate-subspace representation: vertex v spans coordinates
    /// `v*k .. v*k+k` of R^(n*k). Handy for tests and compositions.
    pub fn coordinate_blocks(n: usize, k: usize) -> SubspaceRepresentation {
        let ambient = n * k;
        let bases = (0..n)
            .map(|v| {
                (0..k)
                    .map(|j| {
                        let mut b = vec![0.0; ambient];
                        b[v * k + j] = 1.0;
                        b
                    })
                    .collect()
            })
            .collect();
        SubspaceRepresentation::with_default_tolerances(ambient, k, bases)
            .expect("coordinate blocks are well-formed")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.bases.len()
    }

    pub fn basis(&self, v: usize) -> &[Vec<f64>] {
        &self.bases[v]
    }
}

/// Verification report for subspace representations.
#[derive(Clone, Debug, Default)]
pub struct SubspaceReport {
    /// Vertices whose basis is numerically rank-deficient (Gram determinant
    /// below eps_nz).
    pub degenerate_vertices: Vec<usize>,
    /// Edges with a cross inner product above eps_orth.
    pub non_orthogonal_edges: Vec<(usize, usize)>,
}

impl SubspaceReport {
    pub fn is_valid(&self) -> bool {
        self.degenerate_vertices.is_empty() && self.non_orthogonal_edges.is_empty()
    }
}

fn gram_determinant(basis: &[Vec<f64>]) -> f64 {
    let k = basis.len();
    let mut gram = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = dot(&basis[i], &basis[j]);
        }
    }
    // Gaussian elimination with partial pivoting.
    let mut det = 1.0;
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| gram[a][col].abs().total_cmp(&gram[b][col].abs()))
            .expect("nonempty range");
        if gram[pivot][col].abs() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            gram.swap(pivot, col);
            det = -det;
        }
        det *= gram[col][col];
        for row in col + 1..k {
            let f = gram[row][col] / gram[col][col];
            for j in col..k {
                gram[row][j] -= f * gram[col][j];
            }
        }
    }
    det
}

/// Checks per-vertex basis rank (Gram determinant at least eps_nz) and
/// orthogonality of adjacent subspaces (all cross inner products within
/// eps_orth).
pub fn verify_subspace(g: &Graph, rep: &SubspaceRepresentation) -> Result<SubspaceReport> {
    if rep.n() != g.n() {
        return Err(Error::mismatch(format!(
            "subspace representation on {} vertices against a graph on {}",
            rep.n(),
            g.n()
        )));
    }
    let mut report = SubspaceReport::default();
    for v in 0..g.n() {
        if gram_determinant(rep.basis(v)).abs() < rep.eps_nz {
            report.degenerate_vertices.push(v);
        }
    }
    for &(u, v) in g.edges() {
        let cross_ok = rep
            .basis(u)
            .iter()
            .all(|bu| rep.basis(v).iter().all(|bv| dot(bu, bv).abs() <= rep.eps_orth));
        if !cross_ok {
            report.non_orthogonal_edges.push((u, v));
        }
    }
    Ok(report)
}

/// Modified Gram-Schmidt with a re-orthogonalization pass; errors out when
/// the basis is numerically rank-deficient.
fn orthonormalize(basis: &[Vec<f64>], eps_nz: f64) -> Result<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(basis.len());
    for b in basis {
        let mut v = b.clone();
        for _ in 0..2 {
            for q in &out {
                let proj = dot(&v, q);
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= proj * y;
                }
            }
        }
        let norm = dot(&v, &v).sqrt();
        if norm < eps_nz {
            return Err(Error::Verification(
                "degenerate basis: rank below k within tolerance".into(),
            ));
        }
        for x in &mut v {
            *x /= norm;
        }
        out.push(v);
    }
    Ok(out)
}

/// Builds a representation of the lexicographic product `g1 . g2` from a
/// k-subspace representation of g1 and a k-dimensional representation of
/// g2: each vertex subspace is orthonormalized into an isometry of R^k onto
/// it, and the copy of g2 at vertex x is mapped through that isometry.
pub fn compose_lexicographic(
    g1: &Graph,
    sub: &SubspaceRepresentation,
    g2: &Graph,
    inner: &RealOrthogonalRepresentation,
) -> Result<RealOrthogonalRepresentation> {
    if sub.n() != g1.n() {
        return Err(Error::mismatch("subspace representation does not match g1"));
    }
    if inner.n() != g2.n() {
        return Err(Error::mismatch("inner representation does not match g2"));
    }
    if inner.dim() != sub.k() {
        return Err(Error::mismatch(format!(
            "inner dimension {} must equal the subspace dimension {}",
            inner.dim(),
            sub.k()
        )));
    }
    let mut vectors = Vec::with_capacity(g1.n() * g2.n());
    for x in 0..g1.n() {
        let frame = orthonormalize(sub.basis(x), sub.eps_nz)?;
        for y in 0..g2.n() {
            let coeffs = inner.vector(y);
            let mut w = vec![0.0; sub.ambient()];
            for (c, q) in coeffs.iter().zip(&frame) {
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi += c * qi;
                }
            }
            vectors.push(w);
        }
    }
    let rep = RealOrthogonalRepresentation::new(vectors, sub.eps_orth, sub.eps_nz)?;
    let product = lexicographic_product(g1, g2)?;
    let report = rep.verify_on_graph(&product)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!(
            "composed representation fails verification on the product ({} bad hyperedges)",
            report.unsatisfied_hyperedges.len()
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_blocks_verify_on_cliques() {
        let g = Graph::complete(3);
        let rep = SubspaceRepresentation::coordinate_blocks(3, 2);
        assert_eq!(rep.ambient(), 6);
        assert!(verify_subspace(&g, &rep).unwrap().is_valid());
    }

    #[test]
    fn identical_subspaces_on_an_edge_fail() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let basis = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let rep = SubspaceRepresentation::with_default_tolerances(
            2,
            2,
            vec![basis.clone(), basis],
        )
        .unwrap();
        let report = verify_subspace(&g, &rep).unwrap();
        assert_eq!(report.non_orthogonal_edges, vec![(0, 1)]);
    }

    #[test]
    fn k1_subspace_reduces_to_vector_representation() {
        // k = 1 with unit coordinate lines on an edge behaves exactly like
        // an ordinary orthogonal representation.
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let rep = SubspaceRepresentation::with_default_tolerances(
            2,
            1,
            vec![vec![vec![1.0, 0.0]], vec![vec![0.0, 1.0]]],
        )
        .unwrap();
        assert!(verify_subspace(&g, &rep).unwrap().is_valid());
        let vector_rep = RealOrthogonalRepresentation::with_default_tolerances(vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
        ])
        .unwrap();
        assert!(vector_rep.verify_on_graph(&g).unwrap().is_valid());
    }

    #[test]
    fn rank_deficient_basis_is_degenerate() {
        let g = Graph::empty(1);
        let rep = SubspaceRepresentation::with_default_tolerances(
            3,
            2,
            vec![vec![vec![1.0, 1.0, 0.0], vec![2.0, 2.0, 0.0]]],
        )
        .unwrap();
        let report = verify_subspace(&g, &rep).unwrap();
        assert_eq!(report.degenerate_vertices, vec![0]);
    }

    #[test]
    fn compose_k3_with_k2_gives_k6() {
        let k3 = Graph::complete(3);
        let k2 = Graph::complete(2);
        let sub = SubspaceRepresentation::coordinate_blocks(3, 2);
        let inner = RealOrthogonalRepresentation::with_default_tolerances(vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
        ])
        .unwrap();
        let rep = compose_lexicographic(&k3, &sub, &k2, &inner).unwrap();
        assert_eq!(rep.dim(), 6);
        assert_eq!(rep.n(), 6);
        let product = lexicographic_product(&k3, &k2).unwrap();
        assert_eq!(product, Graph::complete(6));
        assert!(rep.verify_on_graph(&product).unwrap().is_valid());
    }

    #[test]
    fn compose_with_single_vertex_recovers_lines() {
        // g2 a single vertex with a 1-dimensional representation: the
        // composition is just the subspace lines as vectors.
        let g1 = Graph::cycle(4);
        let sub = SubspaceRepresentation::coordinate_blocks(4, 1);
        let g2 = Graph::empty(1);
        let inner =
            RealOrthogonalRepresentation::with_default_tolerances(vec![vec![1.0]]).unwrap();
        let rep = compose_lexicographic(&g1, &sub, &g2, &inner).unwrap();
        assert_eq!(rep.n(), 4);
        assert!(rep.verify_on_graph(&g1).unwrap().is_valid());
    }

    #[test]
    fn degenerate_basis_fails_composition() {
        let g1 = Graph::empty(1);
        let g2 = Graph::empty(1);
        let sub = SubspaceRepresentation::with_default_tolerances(
            2,
            2,
            vec![vec![vec![1.0, 0.0], vec![1.0, 1e-9]]],
        )
        .unwrap();
        let inner = RealOrthogonalRepresentation::with_default_tolerances(vec![vec![
            1.0, 0.0,
        ]])
        .unwrap();
        assert!(compose_lexicographic(&g1, &sub, &g2, &inner).is_err());
    }
}
