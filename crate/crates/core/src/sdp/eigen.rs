//! Dense symmetric eigendecomposition: Householder reduction to tridiagonal
//! form followed by the implicit-shift QL iteration, with eigenvector
//! accumulation. Self-contained so solves stay deterministic across
//! platforms and dependency versions.

use crate::error::{Error, Result};

/// Eigenvalues in ascending order with matching orthonormal eigenvectors
/// (`vectors[k]` is the k-th eigenvector).
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Decomposes a symmetric matrix given as row-major `n x n` data.
pub fn symmetric_eigen(n: usize, data: &[f64]) -> Result<EigenDecomposition> {
    assert_eq!(data.len(), n * n);
    if n == 0 {
        return Ok(EigenDecomposition {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| data[i * n..(i + 1) * n].to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut a, &mut d, &mut e);
    tql2(&mut a, &mut d, &mut e)?;
    // `a` now holds eigenvectors as columns; extract and sort ascending.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| a[row][col]).collect())
        .collect();
    Ok(EigenDecomposition { values, vectors })
}

/// Householder reduction of a real symmetric matrix to tridiagonal form,
/// accumulating the orthogonal transformation in `a`.
fn tred2(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    a[j][i] = a[i][j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g_acc += a[k][j] * a[i][k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i][k] * a[k][j];
                }
                for k in 0..i {
                    a[k][j] -= g * a[k][i];
                }
            }
        }
        d[i] = a[i][i];
        a[i][i] = 1.0;
        for j in 0..i {
            a[j][i] = 0.0;
            a[i][j] = 0.0;
        }
    }
}

/// QL iteration with implicit shifts on a tridiagonal matrix, accumulating
/// eigenvectors into the columns of `z`.
fn tql2(z: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = z.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NonConvergence(
                    "QL iteration exceeded 60 sweeps".into(),
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let denom = g + if g >= 0.0 { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / denom;
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn residual(n: usize, data: &[f64], eig: &EigenDecomposition) -> f64 {
        let mut worst = 0.0f64;
        for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| data[i * n + j] * v[j]).sum();
                worst = worst.max((av - lambda * v[i]).abs());
            }
        }
        worst
    }

    #[test]
    fn diagonal_matrix() {
        let data = vec![3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0];
        let eig = symmetric_eigen(3, &data).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-12);
        assert!((eig.values[1] - 2.0).abs() < 1e-12);
        assert!((eig.values[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn two_by_two_known() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let eig = symmetric_eigen(2, &[2.0, 1.0, 1.0, 2.0]).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-12);
        assert!((eig.values[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn path_laplacian_spectrum() {
        // Laplacian of the path P4: eigenvalues 2 - 2 cos(k pi / 4).
        let n = 4;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = if i == 0 || i == n - 1 { 1.0 } else { 2.0 };
            if i + 1 < n {
                data[i * n + i + 1] = -1.0;
                data[(i + 1) * n + i] = -1.0;
            }
        }
        let eig = symmetric_eigen(n, &data).unwrap();
        for (k, lambda) in eig.values.iter().enumerate() {
            let expected = 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos();
            assert!((lambda - expected).abs() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn random_matrices_reconstruct() {
        let mut rng = Rng::seed_from(77);
        for &n in &[1usize, 2, 3, 5, 10, 24, 60] {
            let mut data = vec![0.0; n * n];
            for i in 0..n {
                for j in i..n {
                    let x = rng.next_normal();
                    data[i * n + j] = x;
                    data[j * n + i] = x;
                }
            }
            let scale: f64 = data.iter().fold(1.0f64, |m, x| m.max(x.abs()));
            let eig = symmetric_eigen(n, &data).unwrap();
            assert!(
                residual(n, &data, &eig) < 1e-9 * scale * n as f64,
                "residual too large at n={n}"
            );
            // Orthonormality.
            for a in 0..n {
                for b in a..n {
                    let dot: f64 = (0..n).map(|i| eig.vectors[a][i] * eig.vectors[b][i]).sum();
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - expected).abs() < 1e-9, "orthonormality at n={n}");
                }
            }
            // Ascending order.
            assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn trace_is_preserved() {
        let mut rng = Rng::seed_from(5);
        let n = 16;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.next_normal();
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        let trace: f64 = (0..n).map(|i| data[i * n + i]).sum();
        let eig = symmetric_eigen(n, &data).unwrap();
        let sum: f64 = eig.values.iter().sum();
        assert!((trace - sum).abs() < 1e-9);
    }
}
