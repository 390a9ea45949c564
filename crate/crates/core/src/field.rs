//! Base fields and their elements.
//!
//! Two fields are supported: the rationals, with arbitrary-precision
//! numerators and denominators, and prime fields `F_p` with `2 < p < 2^31`.
//! The field is carried at runtime so one binary can serve both.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// A prime field, validating that `modulus` is a prime below `2^31`.
    pub fn prime(modulus: u64) -> Result<Self> {
        if modulus >= 1 << 31 {
            return Err(Error::InvalidField(format!("modulus {modulus} is not below 2^31")));
        }
        if !is_prime(modulus) {
            return Err(Error::InvalidField(format!("{modulus} is not prime")));
        }
        Ok(FieldSpec::PrimeField(modulus as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Caveat attached to every report computed over this field.
    pub fn caveat(&self) -> Option<&'static str> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(_) => Some("char-p: Lefschetz theorems assume char 0"),
        }
    }
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational` (or `Q`) and `prime:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus `{p}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected `rational` or `prime:<p>`, got `{s}`"
        )))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// An element of a [`FieldSpec`].
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed
/// by `BigRational`); residues live in `[0, p)`. Mixing fields in one
/// operation is a logic error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(0, field)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(1, field)
    }

    pub fn from_i64(v: i64, field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(v: &BigInt, field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign and absolute value of the printed representative.
    ///
    /// Residues print as the symmetric representative in `(-p/2, p/2]`.
    pub fn split_sign(&self) -> (bool, Scalar) {
        match self {
            Scalar::Rational(q) => (q.is_negative(), Scalar::Rational(q.abs())),
            Scalar::Residue { value, modulus } => {
                if *value > modulus / 2 {
                    (
                        true,
                        Scalar::Residue {
                            value: modulus - value,
                            modulus: *modulus,
                        },
                    )
                } else {
                    (false, self.clone())
                }
            }
        }
    }

    /// Image under reduction modulo `q`, `None` if the denominator vanishes.
    pub fn reduce_mod(&self, q: u64) -> Option<u64> {
        match self {
            Scalar::Rational(r) => {
                let qb = BigInt::from(q);
                let num = r.numer().mod_floor(&qb).to_u64()?;
                let den = r.denom().mod_floor(&qb).to_u64()?;
                if den == 0 {
                    return None;
                }
                Some(num * inv_mod(den, q) % q)
            }
            Scalar::Residue { value, modulus } => {
                debug_assert_eq!(*modulus as u64, q);
                Some(*value as u64)
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> u32 {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => 0,
            (Scalar::Residue { modulus: a, .. }, Scalar::Residue { modulus: b, .. }) if a == b => *a,
            _ => panic!("scalar field mismatch: {:?} vs {:?}", self.field(), other.field()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        let p = self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, .. }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u64 + *b as u64) % p as u64) as u32,
                modulus: p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        let p = self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, .. }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u64 * *b as u64) % p as u64) as u32,
                modulus: p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue { .. } => {
                let (neg, abs) = self.split_sign();
                let Scalar::Residue { value, .. } = abs else { unreachable!() };
                if neg {
                    write!(f, "-{value}")
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(2147483647).is_ok());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(32001).is_err());
        assert_eq!("prime:3".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(3));
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("prime:4".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::PrimeField(7);
        let a = Scalar::from_i64(-1, f);
        assert_eq!(a, Scalar::from_i64(6, f));
        assert_eq!(&a * &a, Scalar::one(f));
        assert_eq!(Scalar::from_i64(3, f).inv().unwrap(), Scalar::from_i64(5, f));
        assert_eq!(a.to_string(), "-1");
        assert!(Scalar::zero(f).inv().is_none());
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = FieldSpec::Rationals;
        let half = Scalar::from_i64(2, q).inv().unwrap();
        let sum = &half + &half;
        assert!(sum.is_one());
        let neg = -&half;
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(neg.reduce_mod(7), Some(3));
    }
}
