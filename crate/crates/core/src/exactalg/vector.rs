use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{add_mod, mul_mod, Field, FieldScalar};

/// A vector with coordinates from a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactVector {
    Mod { p: u64, coords: Vec<u64> },
    Rat(Vec<BigRational>),
}

impl ExactVector {
    pub fn from_scalars(field: Field, scalars: Vec<FieldScalar>) -> Result<ExactVector> {
        match field {
            Field::Prime(p) => {
                let mut coords = Vec::with_capacity(scalars.len());
                for s in scalars {
                    match s {
                        FieldScalar::Mod { p: q, value } if q == p => coords.push(value),
                        other => {
                            return Err(Error::mismatch(format!(
                                "coordinate from {} in a GF({p}) vector",
                                other.field()
                            )))
                        }
                    }
                }
                Ok(ExactVector::Mod { p, coords })
            }
            Field::Rational => {
                let mut coords = Vec::with_capacity(scalars.len());
                for s in scalars {
                    match s {
                        FieldScalar::Rat(r) => coords.push(r),
                        other => {
                            return Err(Error::mismatch(format!(
                                "coordinate from {} in a rational vector",
                                other.field()
                            )))
                        }
                    }
                }
                Ok(ExactVector::Rat(coords))
            }
        }
    }

    pub fn from_integers(field: Field, values: &[i64]) -> ExactVector {
        match field {
            Field::Prime(p) => ExactVector::Mod {
                p,
                coords: values
                    .iter()
                    .map(|v| v.rem_euclid(p as i64) as u64)
                    .collect(),
            },
            Field::Rational => {
                ExactVector::Rat(values.iter().map(|v| BigRational::from_integer((*v).into())).collect())
            }
        }
    }

    /// The `i`th unit vector of dimension `t`.
    pub fn unit(field: Field, t: usize, i: usize) -> ExactVector {
        assert!(i < t);
        match field {
            Field::Prime(p) => {
                let mut coords = vec![0u64; t];
                coords[i] = 1 % p;
                ExactVector::Mod { p, coords }
            }
            Field::Rational => {
                let mut coords = vec![BigRational::zero(); t];
                coords[i] = BigRational::from_integer(1.into());
                ExactVector::Rat(coords)
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            ExactVector::Mod { p, .. } => Field::Prime(*p),
            ExactVector::Rat(_) => Field::Rational,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ExactVector::Mod { coords, .. } => coords.len(),
            ExactVector::Rat(coords) => coords.len(),
        }
    }

    pub fn get(&self, i: usize) -> FieldScalar {
        match self {
            ExactVector::Mod { p, coords } => FieldScalar::Mod {
                p: *p,
                value: coords[i],
            },
            ExactVector::Rat(coords) => FieldScalar::Rat(coords[i].clone()),
        }
    }

    fn check_compatible(&self, other: &ExactVector) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::mismatch(format!(
                "vectors over {} and {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    /// The standard bilinear form: sum of coordinate products, no
    /// conjugation. Degenerate directions (isotropic vectors) are possible
    /// over finite fields; rejecting them is the representation layer's job.
    pub fn inner_product(&self, other: &ExactVector) -> Result<FieldScalar> {
        self.check_compatible(other)?;
        if self.dim() != other.dim() {
            return Err(Error::mismatch(format!(
                "inner product of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(match (self, other) {
            (ExactVector::Mod { p, coords: a }, ExactVector::Mod { coords: b, .. }) => {
                let p = *p;
                let mut acc = 0u64;
                for (x, y) in a.iter().zip(b.iter()) {
                    acc = add_mod(acc, mul_mod(*x, *y, p), p);
                }
                FieldScalar::Mod { p, value: acc }
            }
            (ExactVector::Rat(a), ExactVector::Rat(b)) => {
                let mut acc = BigRational::zero();
                for (x, y) in a.iter().zip(b.iter()) {
                    acc += x * y;
                }
                FieldScalar::Rat(acc)
            }
            _ => unreachable!(),
        })
    }

    pub fn self_inner_product(&self) -> FieldScalar {
        self.inner_product(self).expect("same vector")
    }

    pub fn is_isotropic(&self) -> bool {
        self.self_inner_product().is_zero()
    }

    /// Tensor product with index order `(i, i')`, `i` major.
    pub fn tensor_product(&self, other: &ExactVector) -> Result<ExactVector> {
        self.check_compatible(other)?;
        Ok(match (self, other) {
            (ExactVector::Mod { p, coords: a }, ExactVector::Mod { coords: b, .. }) => {
                let p = *p;
                let mut coords = Vec::with_capacity(a.len() * b.len());
                for x in a {
                    for y in b {
                        coords.push(mul_mod(*x, *y, p));
                    }
                }
                ExactVector::Mod { p, coords }
            }
            (ExactVector::Rat(a), ExactVector::Rat(b)) => {
                let mut coords = Vec::with_capacity(a.len() * b.len());
                for x in a {
                    for y in b {
                        coords.push(x * y);
                    }
                }
                ExactVector::Rat(coords)
            }
            _ => unreachable!(),
        })
    }

    /// Left-associated repeated tensor product, `k >= 1`.
    pub fn tensor_power(&self, k: usize) -> Result<ExactVector> {
        if k < 1 {
            return Err(Error::invalid("tensor power requires k >= 1"));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.tensor_product(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, s: &FieldScalar) -> Result<ExactVector> {
        if self.field() != s.field() {
            return Err(Error::mismatch("scaling by a scalar from another field"));
        }
        Ok(match (self, s) {
            (ExactVector::Mod { p, coords }, FieldScalar::Mod { value, .. }) => ExactVector::Mod {
                p: *p,
                coords: coords.iter().map(|c| mul_mod(*c, *value, *p)).collect(),
            },
            (ExactVector::Rat(coords), FieldScalar::Rat(r)) => {
                ExactVector::Rat(coords.iter().map(|c| c * r).collect())
            }
            _ => unreachable!(),
        })
    }

    pub fn add(&self, other: &ExactVector) -> Result<ExactVector> {
        self.check_compatible(other)?;
        if self.dim() != other.dim() {
            return Err(Error::mismatch("adding vectors of different dimensions"));
        }
        Ok(match (self, other) {
            (ExactVector::Mod { p, coords: a }, ExactVector::Mod { coords: b, .. }) => {
                ExactVector::Mod {
                    p: *p,
                    coords: a
                        .iter()
                        .zip(b.iter())
                        .map(|(x, y)| add_mod(*x, *y, *p))
                        .collect(),
                }
            }
            (ExactVector::Rat(a), ExactVector::Rat(b)) => {
                ExactVector::Rat(a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        })
    }
}
