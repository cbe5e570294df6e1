use crate::error::{Error, Result};

/// A symmetric n x n matrix, the Gram matrix of a vector coloring.
/// Symmetry is structural: writes always set both mirror entries.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    n: usize,
    data: Vec<f64>,
}

impl GramMatrix {
    pub fn identity(n: usize) -> GramMatrix {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        GramMatrix { n, data }
    }

    pub fn from_data(n: usize, data: Vec<f64>) -> Result<GramMatrix> {
        if data.len() != n * n {
            return Err(Error::mismatch("Gram data length is not n^2"));
        }
        let mut m = GramMatrix { n, data };
        // Symmetrize; inputs may carry asymmetric rounding noise.
        for i in 0..n {
            for j in i + 1..n {
                let avg = 0.5 * (m.get(i, j) + m.get(j, i));
                m.set_sym(i, j, avg);
            }
        }
        Ok(m)
    }

    /// Gram matrix of row vectors.
    pub fn from_vectors(vectors: &[Vec<f64>]) -> GramMatrix {
        let n = vectors.len();
        let mut m = GramMatrix::identity(n);
        for i in 0..n {
            for j in i..n {
                let dot = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
                m.set_sym(i, j, dot);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Rescales to an exactly unit diagonal: M := D^{-1/2} M D^{-1/2}.
    /// Positive semidefiniteness is preserved. Errors if a diagonal entry
    /// is not safely positive.
    pub fn normalize_diagonal(&mut self, eps: f64) -> Result<()> {
        let n = self.n;
        let mut scale = vec![0.0; n];
        for (i, s) in scale.iter_mut().enumerate() {
            let d = self.get(i, i);
            if d <= eps {
                return Err(Error::NonConvergence(format!(
                    "diagonal entry {d} at {i} too small to normalize"
                )));
            }
            *s = 1.0 / d.sqrt();
        }
        for i in 0..n {
            for j in 0..n {
                self.data[i * n + j] *= scale[i] * scale[j];
            }
        }
        for i in 0..n {
            self.data[i * n + i] = 1.0;
        }
        Ok(())
    }

    /// Restriction to a vertex subset (for warm starts on induced
    /// subgraphs); `vertices` must be sorted and in range.
    pub fn restrict(&self, vertices: &[usize]) -> GramMatrix {
        let m = vertices.len();
        let mut out = GramMatrix::identity(m);
        for (i, &vi) in vertices.iter().enumerate() {
            for (j, &vj) in vertices.iter().enumerate().skip(i) {
                out.set_sym(i, j, self.get(vi, vj));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vectors_and_restrict() {
        let vectors = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![-1.0, 0.0]];
        let g = GramMatrix::from_vectors(&vectors);
        assert_eq!(g.get(0, 2), -1.0);
        assert_eq!(g.get(0, 1), 0.0);
        let r = g.restrict(&[0, 2]);
        assert_eq!(r.n(), 2);
        assert_eq!(r.get(0, 1), -1.0);
    }

    #[test]
    fn diagonal_normalization() {
        let mut g = GramMatrix::from_data(2, vec![4.0, 2.0, 2.0, 1.0]).unwrap();
        g.normalize_diagonal(1e-12).unwrap();
        assert_eq!(g.get(0, 0), 1.0);
        assert_eq!(g.get(1, 1), 1.0);
        assert!((g.get(0, 1) - 1.0).abs() < 1e-12);
    }
}
