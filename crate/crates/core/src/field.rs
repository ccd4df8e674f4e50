//! Coefficient fields: the rationals and prime fields `Z/p`.
//!
//! Polynomials are generic over a [`Field`] value that carries any runtime
//! parameters (the modulus for prime fields). Field elements themselves are
//! plain data and carry no reference back to the field.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// The default modulus for heavy computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Which coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { modulus: u64 },
}

impl FieldSpec {
    pub fn prime(modulus: u64) -> Result<Self> {
        if modulus <= 2 {
            return Err(Error::InvalidField(format!(
                "modulus {modulus} must be an odd prime"
            )));
        }
        if modulus > u32::MAX as u64 {
            return Err(Error::InvalidField(format!(
                "modulus {modulus} does not fit in 32 bits"
            )));
        }
        if !is_prime(modulus) {
            return Err(Error::InvalidField(format!("{modulus} is not prime")));
        }
        Ok(FieldSpec::PrimeField { modulus })
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::PrimeField {
            modulus: DEFAULT_PRIME,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::PrimeField { modulus } => write!(f, "fp:{modulus}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` (also `qq`, `rationals`) and `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "q" | "Q" | "qq" | "QQ" | "rationals" => Ok(FieldSpec::Rationals),
            _ => {
                let rest = s
                    .strip_prefix("fp:")
                    .or_else(|| s.strip_prefix("Fp:"))
                    .ok_or_else(|| Error::InvalidField(format!("unrecognized field `{s}`")))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::InvalidField(format!("bad modulus `{rest}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in a coefficient field.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number; `None` if the denominator is not a unit.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// Whether the canonical printed form has a leading minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    /// Printed form of the absolute value (symmetric representative for `Z/p`).
    fn fmt_abs(&self, a: &Self::Elem) -> String;
    /// A pseudo-random nonzero element of small size.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }
}

/// The field of rational numbers, backed by arbitrary precision integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn fmt_abs(&self, a: &BigRational) -> String {
        let a = a.abs();
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let mut n: i64 = rng.gen_range(-9..=9);
        if n == 0 {
            n = 1;
        }
        self.from_i64(n)
    }
}

/// The prime field `Z/p` with `2 < p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        FieldSpec::prime(modulus)?;
        Ok(PrimeField { p: modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { modulus: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.inv(&den).map(|d| self.mul(&num, &d))
    }
    fn is_negative(&self, a: &u64) -> bool {
        *a > self.p / 2
    }
    fn fmt_abs(&self, a: &u64) -> String {
        if self.is_negative(a) {
            (self.p - a).to_string()
        } else {
            a.to_string()
        }
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "fp:32003".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField { modulus: 32003 }
        );
        assert!("fp:32004".parse::<FieldSpec>().is_err());
        assert!("fp:2".parse::<FieldSpec>().is_err());
        assert!("gf".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::default().to_string(), "fp:32003");
    }

    #[test]
    fn prime_field_inverse_and_symmetric_print() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert!(f.is_negative(&6));
        assert_eq!(f.fmt_abs(&6), "1");
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = PrimeField::new(32003).unwrap();
        let q = BigRational::new(BigInt::from(3), BigInt::from(4));
        let x = f.from_rational(&q).unwrap();
        assert_eq!(f.mul(&x, &4), 3);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(32003));
        assert_eq!(f.from_rational(&bad), None);
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let q = Rationals;
        let a = BigRational::new(BigInt::from(2), BigInt::from(-4));
        assert_eq!(*a.numer(), BigInt::from(-1));
        assert_eq!(*a.denom(), BigInt::from(2));
        assert_eq!(q.fmt_abs(&a), "1/2");
        assert!(q.is_negative(&a));
    }
}
