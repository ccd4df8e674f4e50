//! Exponent-vector monomials and the term orders on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 16]>;

/// A monomial as a dense exponent vector with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, exponent: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exponent;
        m.degree = exponent;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut degree = 0u32;
        for &e in exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product, with length and overflow checks.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch);
        }
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product. Panics on ring mismatch or exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        match self.checked_mul(other) {
            Ok(m) => m,
            Err(e) => panic!("monomial product failed: {e}"),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i % 64` set when variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn from_parts(exps: Exponents, degree: u32) -> Self {
        debug_assert_eq!(degree, exps.iter().sum::<u32>());
        Monomial { exps, degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// A monomial order: total, multiplicative, with `1` minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    GrevLex,
    /// The first `split` variables form block one, compared first by `first`;
    /// ties are broken on the remaining variables by `second`. Any monomial
    /// involving a block-one variable exceeds every monomial free of them.
    Block {
        split: usize,
        first: Box<TermOrder>,
        second: Box<TermOrder>,
    },
}

impl TermOrder {
    /// Elimination order for the first `split` variables, grevlex within
    /// block one.
    pub fn elimination(split: usize, rest: TermOrder) -> Self {
        TermOrder::Block {
            split,
            first: Box::new(TermOrder::GrevLex),
            second: Box::new(rest),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::GrevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex_tail(&a.exps, &b.exps)),
            _ => self.cmp_slices(&a.exps, &b.exps),
        }
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex_tail(a, b))
            }
            TermOrder::Block {
                split,
                first,
                second,
            } => {
                let k = (*split).min(a.len());
                first
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| second.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }

    /// Lex and grevlex restrict to any subset of the variables (kept in their
    /// original relative order) as the same kind of order.
    pub fn restricts_to_subsets(&self) -> bool {
        !matches!(self, TermOrder::Block { .. })
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let TermOrder::Block {
            split,
            first,
            second,
        } = self
        {
            if *split > nvars {
                return Err(Error::Domain(format!(
                    "block split {split} exceeds {nvars} variables"
                )));
            }
            first.validate(*split)?;
            second.validate(nvars - split)?;
        }
        Ok(())
    }
}

/// Grevlex tie-break: at the last differing exponent, the smaller exponent
/// wins.
#[inline]
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::GrevLex => f.write_str("grevlex"),
            TermOrder::Block {
                split,
                first,
                second,
            } => write!(f, "block({split};{first},{second})"),
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(TermOrder::Lex),
            "grevlex" | "revlex" => Ok(TermOrder::GrevLex),
            other => Err(Error::Domain(format!("unknown term order `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(m(&[2, 1, 0]).mul(&m(&[0, 1, 1])), m(&[2, 2, 1]));
        assert_eq!(m(&[3, 0, 2]).mul(&Monomial::one(3)), m(&[3, 0, 2]));
        assert_eq!(m(&[1]).mul(&m(&[1])), m(&[2]));
        assert_eq!(m(&[1, 2]).checked_mul(&m(&[1])), Err(Error::RingMismatch));
        assert_eq!(
            m(&[u32::MAX]).checked_mul(&m(&[1])),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn order_examples() {
        // x^3 vs x^2 y in lex
        assert_eq!(
            TermOrder::Lex.cmp(&m(&[3, 0, 0]), &m(&[2, 1, 0])),
            Ordering::Greater
        );
        // x^2 y vs x y^2 in grevlex
        assert_eq!(
            TermOrder::GrevLex.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0])),
            Ordering::Greater
        );
        // t vs x^100 eliminating t
        let elim = TermOrder::elimination(1, TermOrder::GrevLex);
        assert_eq!(elim.cmp(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
    }

    #[test]
    fn grevlex_tie_break_uses_last_variable() {
        // same degree: x z vs y^2 -> y^2 is larger (z has smaller exponent)
        assert_eq!(
            TermOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            TermOrder::GrevLex.cmp(&m(&[1, 1, 1]), &m(&[1, 1, 1])),
            Ordering::Equal
        );
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert_eq!(a.gcd(&m(&[0, 3, 1])), m(&[0, 2, 0]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
    }
}
