use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{inv_mod, mul_mod, sub_mod, ExactVector, Field, FieldScalar};

/// A rectangular matrix over a single field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactMatrix {
    Mod {
        p: u64,
        rows: usize,
        cols: usize,
        data: Vec<u64>,
    },
    Rat {
        rows: usize,
        cols: usize,
        data: Vec<BigRational>,
    },
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> ExactMatrix {
        match field {
            Field::Prime(p) => ExactMatrix::Mod {
                p,
                rows,
                cols,
                data: vec![0; rows * cols],
            },
            Field::Rational => ExactMatrix::Rat {
                rows,
                cols,
                data: vec![BigRational::zero(); rows * cols],
            },
        }
    }

    pub fn identity(field: Field, n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one()).expect("diagonal in range");
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[ExactVector]) -> Result<ExactMatrix> {
        let cols = rows.first().map(|r| r.dim()).unwrap_or(0);
        let mut m = ExactMatrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.field() != field {
                return Err(Error::mismatch("row from a different field"));
            }
            if row.dim() != cols {
                return Err(Error::mismatch("ragged rows"));
            }
            for j in 0..cols {
                m.set(i, j, row.get(j))?;
            }
        }
        Ok(m)
    }

    pub fn from_integers(field: Field, rows: usize, cols: usize, values: &[i64]) -> ExactMatrix {
        assert_eq!(values.len(), rows * cols);
        let mut m = ExactMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, field.from_integer(values[i * cols + j]))
                    .expect("in range");
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        match self {
            ExactMatrix::Mod { p, .. } => Field::Prime(*p),
            ExactMatrix::Rat { .. } => Field::Rational,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Mod { rows, .. } => *rows,
            ExactMatrix::Rat { rows, .. } => *rows,
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Mod { cols, .. } => *cols,
            ExactMatrix::Rat { cols, .. } => *cols,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> FieldScalar {
        match self {
            ExactMatrix::Mod { p, cols, data, .. } => FieldScalar::Mod {
                p: *p,
                value: data[i * cols + j],
            },
            ExactMatrix::Rat { cols, data, .. } => FieldScalar::Rat(data[i * cols + j].clone()),
        }
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        match self {
            ExactMatrix::Mod { cols, data, .. } => data[i * cols + j] == 0,
            ExactMatrix::Rat { cols, data, .. } => data[i * cols + j].is_zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldScalar) -> Result<()> {
        if self.field() != value.field() {
            return Err(Error::mismatch("entry from a different field"));
        }
        match (self, value) {
            (ExactMatrix::Mod { cols, data, .. }, FieldScalar::Mod { value, .. }) => {
                data[i * *cols + j] = value;
            }
            (ExactMatrix::Rat { cols, data, .. }, FieldScalar::Rat(r)) => {
                data[i * *cols + j] = r;
            }
            _ => unreachable!(),
        }
        Ok(())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let (r, c) = (self.rows(), self.cols());
        let mut out = ExactMatrix::zeros(self.field(), c, r);
        for i in 0..r {
            for j in 0..c {
                out.set(j, i, self.get(i, j)).expect("in range");
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.field() != other.field() {
            return Err(Error::mismatch("multiplying matrices over different fields"));
        }
        if self.cols() != other.rows() {
            return Err(Error::mismatch(format!(
                "multiplying {}x{} by {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let (n, k, m) = (self.rows(), self.cols(), other.cols());
        match (self, other) {
            (
                ExactMatrix::Mod { p, data: a, .. },
                ExactMatrix::Mod { data: b, .. },
            ) => {
                let p = *p;
                let mut data = vec![0u64; n * m];
                for i in 0..n {
                    for l in 0..k {
                        let x = a[i * k + l];
                        if x == 0 {
                            continue;
                        }
                        for j in 0..m {
                            let prod = mul_mod(x, b[l * m + j], p);
                            data[i * m + j] = super::add_mod(data[i * m + j], prod, p);
                        }
                    }
                }
                Ok(ExactMatrix::Mod {
                    p,
                    rows: n,
                    cols: m,
                    data,
                })
            }
            (ExactMatrix::Rat { data: a, .. }, ExactMatrix::Rat { data: b, .. }) => {
                let mut data = vec![BigRational::zero(); n * m];
                for i in 0..n {
                    for l in 0..k {
                        let x = &a[i * k + l];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..m {
                            data[i * m + j] += x * &b[l * m + j];
                        }
                    }
                }
                Ok(ExactMatrix::Rat {
                    rows: n,
                    cols: m,
                    data,
                })
            }
            _ => unreachable!(),
        }
    }

    /// Exact rank by Gaussian elimination. Pivot selection is the first
    /// nonzero entry in column order, which keeps runs reproducible.
    pub fn rank(&self) -> usize {
        match self {
            ExactMatrix::Mod { p, rows, cols, data } => {
                rank_mod(*p, *rows, *cols, &mut data.clone())
            }
            ExactMatrix::Rat { rows, cols, data } => rank_rat(*rows, *cols, &mut data.clone()),
        }
    }

    /// Number of nonzero entries.
    pub fn sparsity(&self) -> usize {
        let (r, c) = (self.rows(), self.cols());
        let mut count = 0;
        for i in 0..r {
            for j in 0..c {
                if !self.is_zero_at(i, j) {
                    count += 1;
                }
            }
        }
        count
    }
}

fn rank_mod(p: u64, rows: usize, cols: usize, data: &mut [u64]) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| data[r * cols + col] != 0);
        let Some(pivot) = pivot else { continue };
        if pivot != rank {
            for j in 0..cols {
                data.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(data[rank * cols + col], p);
        for j in col..cols {
            data[rank * cols + j] = mul_mod(data[rank * cols + j], inv, p);
        }
        for r in 0..rows {
            if r != rank && data[r * cols + col] != 0 {
                let factor = data[r * cols + col];
                for j in col..cols {
                    let sub = mul_mod(factor, data[rank * cols + j], p);
                    data[r * cols + j] = sub_mod(data[r * cols + j], sub, p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_rat(rows: usize, cols: usize, data: &mut [BigRational]) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| !data[r * cols + col].is_zero());
        let Some(pivot) = pivot else { continue };
        if pivot != rank {
            for j in 0..cols {
                data.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = data[rank * cols + col].recip();
        for j in col..cols {
            let v = &data[rank * cols + j] * &inv;
            data[rank * cols + j] = v;
        }
        for r in 0..rows {
            if r != rank && !data[r * cols + col].is_zero() {
                let factor = data[r * cols + col].clone();
                for j in col..cols {
                    let v = &data[r * cols + j] - &factor * &data[rank * cols + j];
                    data[r * cols + j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}
