use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{add_mod, inv_mod, is_prime, mul_mod, sub_mod};

/// The two supported coefficient fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldScalar {
        match self {
            Field::Prime(p) => FieldScalar::Mod { p, value: 0 },
            Field::Rational => FieldScalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(self) -> FieldScalar {
        match self {
            Field::Prime(p) => FieldScalar::Mod { p, value: 1 % p },
            Field::Rational => FieldScalar::Rat(BigRational::one()),
        }
    }

    pub fn from_integer(self, v: i64) -> FieldScalar {
        match self {
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                FieldScalar::Mod { p, value: r }
            }
            Field::Rational => FieldScalar::Rat(BigRational::from(BigInt::from(v))),
        }
    }

    /// Parses the text encoding: decimal residue for GF(p), `p/q` or an
    /// integer literal for rationals.
    pub fn parse_scalar(self, token: &str) -> Result<FieldScalar> {
        match self {
            Field::Prime(p) => {
                let v: i64 = token
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad GF({p}) scalar `{token}`")))?;
                Ok(self.from_integer(v))
            }
            Field::Rational => {
                let rat = if let Some((num, den)) = token.split_once('/') {
                    let n = BigInt::from_str(num.trim())
                        .map_err(|_| Error::invalid(format!("bad rational `{token}`")))?;
                    let d = BigInt::from_str(den.trim())
                        .map_err(|_| Error::invalid(format!("bad rational `{token}`")))?;
                    if d.is_zero() {
                        return Err(Error::invalid(format!("zero denominator in `{token}`")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n = BigInt::from_str(token.trim())
                        .map_err(|_| Error::invalid(format!("bad rational `{token}`")))?;
                    BigRational::from(n)
                };
                Ok(FieldScalar::Rat(rat))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf:{p}"),
            Field::Rational => write!(f, "rat"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        if s == "rat" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::invalid(format!("bad field `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::invalid(format!("unknown field `{s}`")))
    }
}

/// A single field element, tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Mod { p: u64, value: u64 },
    Rat(BigRational),
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Mod { p, .. } => Field::Prime(*p),
            FieldScalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Mod { value, .. } => *value == 0,
            FieldScalar::Rat(r) => r.is_zero(),
        }
    }

    fn check_same(&self, other: &FieldScalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::mismatch(format!(
                "scalars from {} and {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldScalar::Mod { p, value: a }, FieldScalar::Mod { value: b, .. }) => {
                FieldScalar::Mod {
                    p: *p,
                    value: add_mod(*a, *b, *p),
                }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a + b),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldScalar::Mod { p, value: a }, FieldScalar::Mod { value: b, .. }) => {
                FieldScalar::Mod {
                    p: *p,
                    value: sub_mod(*a, *b, *p),
                }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a - b),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldScalar::Mod { p, value: a }, FieldScalar::Mod { value: b, .. }) => {
                FieldScalar::Mod {
                    p: *p,
                    value: mul_mod(*a, *b, *p),
                }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a * b),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Mod { p, value } => FieldScalar::Mod {
                p: *p,
                value: sub_mod(0, *value, *p),
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(-r),
        }
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::invalid("inverse of zero"));
        }
        Ok(match self {
            FieldScalar::Mod { p, value } => FieldScalar::Mod {
                p: *p,
                value: inv_mod(*value, *p),
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(r.recip()),
        })
    }

    pub fn div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.mul(&other.inv()?)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Mod { value, .. } => write!(f, "{value}"),
            FieldScalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps denominators positive; belt and braces.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn random_scalar(field: Field, rng: &mut Rng) -> FieldScalar {
        match field {
            Field::Prime(p) => FieldScalar::Mod {
                p,
                value: rng.next_below(p),
            },
            Field::Rational => {
                let n = rng.next_below(41) as i64 - 20;
                let d = rng.next_below(9) as i64 + 1;
                FieldScalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = Rng::seed_from(101);
        for field in [
            Field::Prime(2),
            Field::Prime(3),
            Field::Prime(5),
            Field::Rational,
        ] {
            for _ in 0..200 {
                let a = random_scalar(field, &mut rng);
                let b = random_scalar(field, &mut rng);
                let c = random_scalar(field, &mut rng);
                // Associativity and commutativity.
                assert_eq!(
                    a.add(&b).unwrap().add(&c).unwrap(),
                    a.add(&b.add(&c).unwrap()).unwrap()
                );
                assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
                assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
                assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                // Distributivity.
                assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
                // Inverses.
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), field.one());
                }
                assert_eq!(a.add(&a.neg()).unwrap(), field.zero());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let f5 = Field::prime(5).unwrap();
        let s = f5.parse_scalar("7").unwrap();
        assert_eq!(s, FieldScalar::Mod { p: 5, value: 2 });
        assert_eq!(s.to_string(), "2");

        let q = Field::Rational.parse_scalar("-3/6").unwrap();
        assert_eq!(q.to_string(), "-1/2");
        assert_eq!(Field::Rational.parse_scalar("4").unwrap().to_string(), "4");
        assert!(Field::Rational.parse_scalar("1/0").is_err());
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let a = Field::Prime(3).one();
        let b = Field::Prime(5).one();
        assert!(a.add(&b).is_err());
        let r = Field::Rational.one();
        assert!(a.mul(&r).is_err());
    }
}
