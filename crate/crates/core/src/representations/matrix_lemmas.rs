//! Matrix lemmas behind the hardness arguments: the Erdos-Szekeres Ramsey
//! bound, clique extraction from nonzero patterns of low-rank matrices with
//! nonzero diagonal, and the sparsity lower bound for such matrices.

use crate::combinatorics::{binomial, Graph};
use crate::error::{Error, Result};
use crate::exactalg::ExactMatrix;

/// The Erdos-Szekeres bound `R(s,t) <= binom(t+s-2, s-1)`.
pub fn erdos_szekeres_bound(s: u64, t: u64) -> Result<u64> {
    if s < 1 || t < 1 {
        return Err(Error::invalid("Ramsey parameters must be at least 1"));
    }
    binomial(t + s - 2, s - 1).ok_or_else(|| Error::capacity("Ramsey bound overflows u64"))
}

fn check_square_nonzero_diagonal(m: &ExactMatrix) -> Result<usize> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::invalid("matrix must be square"));
    }
    for i in 0..n {
        if m.is_zero_at(i, i) {
            return Err(Error::invalid(format!("zero diagonal entry at {i}")));
        }
    }
    Ok(n)
}

/// The nonzero-pattern graph: `i ~ i'` iff `M_{i,i'} != 0` or `M_{i',i} != 0`.
fn pattern_graph(m: &ExactMatrix) -> Graph {
    let n = m.rows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !m.is_zero_at(i, j) || !m.is_zero_at(j, i) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("valid pattern graph")
}

fn find_clique_of_size(g: &Graph, s: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, clique: &mut Vec<usize>, start: usize, s: usize) -> bool {
        if clique.len() == s {
            return true;
        }
        for v in start..g.n() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if extend(g, clique, v + 1, s) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    let mut clique = Vec::new();
    if extend(g, &mut clique, 0, s) {
        Some(clique)
    } else {
        None
    }
}

/// A set C of `s` indices such that `M_{i,i'} != 0` or `M_{i',i} != 0` for
/// all i, i' in C. Requires a square matrix with nonzero diagonal and
/// `n >= R(s, rank+1)` bounded via Erdos-Szekeres; under those conditions
/// the set exists because any independent set of the pattern graph indexes a
/// diagonal principal submatrix, capping independence at the rank.
pub fn ramsey_clique(m: &ExactMatrix, s: usize) -> Result<Vec<usize>> {
    let n = check_square_nonzero_diagonal(m)?;
    if s < 1 {
        return Err(Error::invalid("clique size must be at least 1"));
    }
    let rank = m.rank() as u64;
    let bound = erdos_szekeres_bound(s as u64, rank + 1)?;
    if (n as u64) < bound {
        return Err(Error::invalid(format!(
            "need n >= R({s}, {}) <= {bound}, got n = {n}",
            rank + 1
        )));
    }
    let g = pattern_graph(m);
    let clique = find_clique_of_size(&g, s).ok_or_else(|| {
        Error::Verification("pattern clique guaranteed by the rank bound was not found".into())
    })?;
    Ok(clique)
}

/// Report of the sparsity check `s(M) >= n^2 / (4 rank(M))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrwReport {
    pub n: usize,
    pub sparsity: usize,
    pub rank: usize,
    pub holds: bool,
}

impl GrwReport {
    /// The bound value n^2 / (4 rank) as a float, for display.
    pub fn bound(&self) -> f64 {
        (self.n * self.n) as f64 / (4.0 * self.rank as f64)
    }
}

/// Counts nonzeros, computes the rank, and evaluates the inequality
/// exactly (in integers). A `holds = false` outcome indicates an
/// implementation bug, since the inequality is a theorem for square
/// matrices with nonzero diagonal.
pub fn grw_check(m: &ExactMatrix) -> Result<GrwReport> {
    let n = check_square_nonzero_diagonal(m)?;
    let sparsity = m.sparsity();
    let rank = m.rank();
    let holds = 4u128 * sparsity as u128 * rank as u128 >= (n as u128) * (n as u128);
    Ok(GrwReport {
        n,
        sparsity,
        rank,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;
    use crate::rng::Rng;

    #[test]
    fn erdos_szekeres_values() {
        assert_eq!(erdos_szekeres_bound(2, 7).unwrap(), 7);
        assert_eq!(erdos_szekeres_bound(3, 3).unwrap(), 6);
        assert_eq!(erdos_szekeres_bound(1, 9).unwrap(), 1);
        assert!(erdos_szekeres_bound(0, 3).is_err());
    }

    #[test]
    fn all_ones_matrix_clique() {
        let m = ExactMatrix::from_integers(Field::Rational, 5, 5, &[1; 25]);
        let clique = ramsey_clique(&m, 3).unwrap();
        assert_eq!(clique.len(), 3);
    }

    #[test]
    fn identity_below_bound_is_rejected() {
        let m = ExactMatrix::identity(Field::Rational, 3);
        // rank 3, R(2,4) <= binom(4,1) = 4 > 3.
        assert!(ramsey_clique(&m, 2).is_err());
    }

    #[test]
    fn two_block_matrix_pairs_within_a_block() {
        // Two all-ones 3x3 blocks over GF(2): rank 2, R(2,3) <= 3 <= 6.
        let mut vals = vec![0i64; 36];
        for i in 0..3 {
            for j in 0..3 {
                vals[i * 6 + j] = 1;
                vals[(i + 3) * 6 + (j + 3)] = 1;
            }
        }
        let m = ExactMatrix::from_integers(Field::prime(2).unwrap(), 6, 6, &vals);
        let clique = ramsey_clique(&m, 2).unwrap();
        assert_eq!(clique.len(), 2);
        let same_block = (clique[0] < 3) == (clique[1] < 3);
        assert!(same_block);
    }

    #[test]
    fn zero_diagonal_is_rejected() {
        let m = ExactMatrix::from_integers(Field::Rational, 2, 2, &[1, 1, 1, 0]);
        assert!(ramsey_clique(&m, 1).is_err());
        assert!(grw_check(&m).is_err());
    }

    #[test]
    fn grw_trivial_cases() {
        for n in [1usize, 4, 9] {
            let id = ExactMatrix::identity(Field::Rational, n);
            let report = grw_check(&id).unwrap();
            assert!(report.holds);
            assert_eq!(report.sparsity, n);
            assert_eq!(report.rank, n);
        }
        let ones = ExactMatrix::from_integers(Field::Rational, 4, 4, &[1; 16]);
        let report = grw_check(&ones).unwrap();
        assert!(report.holds);
        assert_eq!((report.sparsity, report.rank), (16, 1));
    }

    #[test]
    fn grw_holds_on_random_gf2_matrices() {
        let mut rng = Rng::seed_from(303);
        for _ in 0..100 {
            let n = 2 + rng.next_usize_below(8);
            let mut vals = vec![0i64; n * n];
            for (idx, v) in vals.iter_mut().enumerate() {
                let (i, j) = (idx / n, idx % n);
                *v = if i == j { 1 } else { rng.next_below(2) as i64 };
            }
            let m = ExactMatrix::from_integers(Field::prime(2).unwrap(), n, n, &vals);
            assert!(grw_check(&m).unwrap().holds);
        }
    }
}
