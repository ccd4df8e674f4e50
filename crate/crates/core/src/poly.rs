//! Sparse multivariate polynomials in canonical form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Exponents, Monomial};
use crate::ring::{PolyRing, RingRef};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term<F: Field> {
    pub coeff: F::Elem,
    pub mono: Monomial,
}

impl<F: Field> fmt::Debug for Term<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*{:?}", self.coeff, self.mono)
    }
}

/// A polynomial whose terms are sorted strictly descending in the ring's
/// order, with no zero coefficients. The empty term list is zero.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &RingRef<F>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &RingRef<F>, index: usize) -> Self {
        Self::monomial(
            ring,
            ring.field().one(),
            Monomial::var(ring.nvars(), index, 1),
        )
    }

    pub fn monomial(ring: &RingRef<F>, c: F::Elem, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono: m }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalizes an arbitrary list of terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &RingRef<F>, terms: Vec<(F::Elem, Monomial)>) -> Result<Self> {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
            let slot = acc.entry(m).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
        let mut terms: Vec<Term<F>> = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Builds from terms already sorted strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.field().is_one(&self.terms[0].coeff)
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// At most two terms.
    pub fn is_binomial(&self) -> bool {
        self.terms.len() <= 2
    }

    /// Indices of all variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, s)| **s)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(&self.ring);
        for t in &small.terms {
            acc = acc.add_mul_term(&t.coeff, &t.mono, large)?;
        }
        Ok(acc)
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Result<Self> {
        let field = self.field();
        if field.is_zero(c) {
            return Ok(Self::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: field.mul(&t.coeff, c),
                mono: t.mono.checked_mul(m)?,
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scalar_mul(&inv)
            }
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    out.push(Term {
                        coeff: if subtract { field.neg(&t.coeff) } else { t.coeff.clone() },
                        mono: t.mono.clone(),
                    });
                }
                (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let t = b.next().unwrap();
                        out.push(Term {
                            coeff: if subtract { field.neg(&t.coeff) } else { t.coeff.clone() },
                            mono: t.mono.clone(),
                        });
                    }
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let c = if subtract {
                            field.sub(&x.coeff, &y.coeff)
                        } else {
                            field.add(&x.coeff, &y.coeff)
                        };
                        if !field.is_zero(&c) {
                            out.push(Term {
                                coeff: c,
                                mono: x.mono.clone(),
                            });
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self + c * m * g`, in one merge pass.
    pub(crate) fn add_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        add_mul_term_into(&self.ring, &self.terms, c, m, &g.terms, &mut out)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    /// Moves the polynomial into another ring, sending variable `i` to
    /// variable `var_map[i]` of `target`. Callers guarantee injectivity.
    pub fn embed(&self, target: &RingRef<F>, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps: Exponents = smallvec::smallvec![0; n];
                for (i, &e) in t.mono.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[var_map[i]] = e;
                    }
                }
                (t.coeff.clone(), Monomial::from_parts(exps, t.mono.degree()))
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the ring of
    /// the images.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        if images.iter().any(|p| !PolyRing::same(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: HashMap<(usize, u32), Polynomial<F>> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                prod = prod.checked_mul(&p)?;
                if prod.is_zero() {
                    break;
                }
            }
            acc = acc.checked_add(&prod)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Self) -> Result<Option<Self>> {
        self.check_ring(d)?;
        let Some(lead) = d.leading_term() else {
            return Err(Error::Domain("division by zero polynomial".into()));
        };
        let field = self.field();
        let lc_inv = field.inv(&lead.coeff).expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term() {
            let Some(m) = lead.mono.quotient_of(&t.mono) else {
                return Ok(None);
            };
            let c = field.mul(&t.coeff, &lc_inv);
            rem = rem.add_mul_term(&field.neg(&c), &m, d)?;
            quot.push(Term { coeff: c, mono: m });
        }
        Ok(Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        }))
    }

    /// Reinterprets the terms under another ring with the same variables
    /// (e.g. a different order).
    pub fn reorder(&self, target: &RingRef<F>) -> Result<Self> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.clone()))
            .collect();
        Self::from_terms(target, terms)
    }
}

/// Merges `a + c * m * b` into `out`; both inputs sorted descending.
pub(crate) fn add_mul_term_into<F: Field>(
    ring: &Arc<PolyRing<F>>,
    a: &[Term<F>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F>],
    out: &mut Vec<Term<F>>,
) -> Result<()> {
    let field = ring.field();
    let order = ring.order();
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Monomial> = None;
    while j < b.len() || i < a.len() {
        if j < b.len() && pending.is_none() {
            pending = Some(b[j].mono.checked_mul(m)?);
        }
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(pm)) => match order.cmp(&x.mono, pm) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: field.mul(&b[j].coeff, c),
                        mono: pending.take().unwrap(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = field.add(&x.coeff, &field.mul(&b[j].coeff, c));
                    let mono = pending.take().unwrap();
                    if !field.is_zero(&coeff) {
                        out.push(Term { coeff, mono });
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(Term {
                    coeff: field.mul(&b[j].coeff, c),
                    mono: pending.take().unwrap(),
                });
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $trait<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;

            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("polynomial {}: {e}", stringify!($method)),
                }
            }
        }

        impl<F: Field> $trait<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;

            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Terms in descending order, e.g. `x^3 - y*z` or `-2*a^2*b + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        let vars = self.ring.vars();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = field.is_negative(&t.coeff);
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = field.fmt_abs(&t.coeff);
            let mut first = true;
            if abs != "1" || t.mono.is_one() {
                f.write_str(&abs)?;
                first = false;
            }
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::TermOrder;

    fn ring() -> RingRef<Rationals> {
        PolyRing::new(&["x", "y", "z"], Rationals, TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn sum_and_difference() {
        let r = ring();
        let x = r.gen("x").unwrap();
        let y = r.gen("y").unwrap();
        let s = &(&x + &y) + &(&x - &y);
        assert_eq!(s, Polynomial::from_i64(&r, 2) * x.clone());
        assert_eq!(s.to_string(), "2*x");
        assert!((&x * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring();
        let r2 = PolyRing::new(&["x", "y"], Rationals, TermOrder::GrevLex).unwrap();
        let a = r1.gen("x").unwrap();
        let b = r2.gen("x").unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn display_orders_terms_descending() {
        let r = ring();
        let x = r.gen("x").unwrap();
        let y = r.gen("y").unwrap();
        let z = r.gen("z").unwrap();
        let f = &(&y * &z) - &x.pow(3);
        assert_eq!(f.to_string(), "-x^3 + y*z");
        assert_eq!(Polynomial::<Rationals>::zero(&r).to_string(), "0");
        assert_eq!(Polynomial::from_i64(&r, -5).to_string(), "-5");
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = r.gen("x").unwrap();
        let y = r.gen("y").unwrap();
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.divide_exact(&(&x + &y)).unwrap(), Some(&x - &y));
        assert_eq!(f.divide_exact(&x).unwrap(), None);
    }

    #[test]
    fn substitution() {
        let src = ring();
        let t_ring = PolyRing::new(&["t"], Rationals, TermOrder::GrevLex).unwrap();
        let t = t_ring.gen("t").unwrap();
        let images = vec![t.pow(3), t.pow(4), t.pow(5)];
        let x = src.gen("x").unwrap();
        let y = src.gen("y").unwrap();
        let z = src.gen("z").unwrap();
        let f = &x.pow(3) - &(&y * &z);
        assert!(f.substitute(&t_ring, &images).unwrap().is_zero());
        let g = &x.pow(2) - &y;
        assert_eq!(
            g.substitute(&t_ring, &images).unwrap(),
            &t.pow(6) - &t.pow(4)
        );
    }
}
