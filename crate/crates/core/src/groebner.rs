//! Buchberger's algorithm with the Gebauer–Möller pair criteria, normal
//! forms and reduced Gröbner bases.
//!
//! Pairs are processed by the normal strategy: the pair whose lcm is
//! smallest in the term order goes first, ties broken by basis indices. The
//! whole computation is deterministic for fixed input order.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{BudgetResource, Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{add_mul_term_into, Polynomial, Term};
use crate::ring::{PolyRing, RingRef};

/// Resource caps for Gröbner computations. Exceeding any cap aborts with
/// [`Error::BudgetExceeded`].
///
/// Clones share the start instant and the statistics counters, so one
/// budget can be threaded through a whole multi-step computation.
#[derive(Debug, Clone)]
pub struct ComputationBudget {
    /// Pairs processed by a single Buchberger run.
    pub max_pairs: u64,
    pub max_basis: usize,
    pub max_degree: u32,
    /// Measured from the creation of the budget.
    pub wall_clock: Duration,
    /// Tail-reduce the final basis elements in parallel.
    pub parallel: bool,
    started: Instant,
    stats: Arc<EngineStats>,
}

impl Default for ComputationBudget {
    fn default() -> Self {
        ComputationBudget {
            max_pairs: 200_000,
            max_basis: 50_000,
            max_degree: 60,
            wall_clock: Duration::from_secs(600),
            parallel: false,
            started: Instant::now(),
            stats: Arc::default(),
        }
    }
}

impl ComputationBudget {
    pub fn with_pairs(mut self, n: u64) -> Self {
        self.max_pairs = n;
        self
    }

    pub fn with_seconds(mut self, secs: u64) -> Self {
        self.wall_clock = Duration::from_secs(secs);
        self
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    pub fn stats(&self) -> StatsSnapshot {
        self.stats.snapshot()
    }

    fn check_clock(&self) -> Result<()> {
        if self.started.elapsed() > self.wall_clock {
            return Err(Error::BudgetExceeded {
                resource: BudgetResource::WallClock,
                limit: self.wall_clock.as_secs(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
struct EngineStats {
    runs: AtomicU64,
    pairs: AtomicU64,
    pruned: AtomicU64,
    zero_reductions: AtomicU64,
    max_basis: AtomicU64,
}

/// Counters accumulated across all runs sharing a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatsSnapshot {
    pub groebner_runs: u64,
    pub pairs_processed: u64,
    pub pairs_pruned: u64,
    pub zero_reductions: u64,
    pub max_basis_size: u64,
}

impl EngineStats {
    fn snapshot(&self) -> StatsSnapshot {
        StatsSnapshot {
            groebner_runs: self.runs.load(AtomicOrdering::Relaxed),
            pairs_processed: self.pairs.load(AtomicOrdering::Relaxed),
            pairs_pruned: self.pruned.load(AtomicOrdering::Relaxed),
            zero_reductions: self.zero_reductions.load(AtomicOrdering::Relaxed),
            max_basis_size: self.max_basis.load(AtomicOrdering::Relaxed),
        }
    }
}

/// A Gröbner basis of monic polynomials. When `reduced` is set the basis is
/// the unique reduced basis of its ideal, sorted ascending by leading
/// monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    elements: Vec<Polynomial<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<F>> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_unit)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|p| p.leading_monomial().cloned())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every S-polynomial reduces to zero modulo the basis.
    pub fn check_s_pairs(&self) -> Result<bool> {
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j])?;
                if !self.normal_form(&s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `lc(g) * lcm/lm(f) * f - lc(f) * lcm/lm(g) * g` scaled so both leading
/// terms cancel.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let field = f.field();
    let l = tf.mono.lcm(&tg.mono);
    let mf = tf.mono.quotient_of(&l).expect("lcm");
    let mg = tg.mono.quotient_of(&l).expect("lcm");
    let cf = field.inv(&tf.coeff).expect("nonzero");
    let cg = field.inv(&tg.coeff).expect("nonzero");
    let a = f.mul_term(&cf, &mf)?;
    a.add_mul_term(&field.neg(&cg), &mg, g)
}

struct Reducer<'a, F: Field> {
    poly: &'a Polynomial<F>,
    mask: u64,
}

fn find_reducer<'a, F: Field>(reducers: &[Reducer<'a, F>], m: &Monomial) -> Option<&'a Polynomial<F>> {
    let mask = m.support_mask();
    reducers
        .iter()
        .find(|r| r.mask & !mask == 0 && r.poly.leading_monomial().expect("nonzero").divides(m))
        .map(|r| r.poly)
}

/// Full reduction of every term of `f` by the reducers. Returns the
/// remainder; no monomial of it is divisible by a reducer's leading monomial.
fn reduce_with<F: Field>(f: &Polynomial<F>, reducers: &[Reducer<'_, F>]) -> Result<Polynomial<F>> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut rest: Vec<Term<F>> = f.terms().to_vec();
    let mut start = 0;
    let mut done: Vec<Term<F>> = Vec::new();
    let mut scratch: Vec<Term<F>> = Vec::new();
    while start < rest.len() {
        let lead = &rest[start];
        match find_reducer(reducers, &lead.mono) {
            Some(g) => {
                let gl = g.leading_term().expect("nonzero");
                let q = gl.mono.quotient_of(&lead.mono).expect("divides");
                let c = field.neg(&field.div(&lead.coeff, &gl.coeff));
                scratch.clear();
                // The leading terms cancel; merge the remainders.
                add_mul_term_into(&ring, &rest[start + 1..], &c, &q, &g.terms()[1..], &mut scratch)?;
                std::mem::swap(&mut rest, &mut scratch);
                start = 0;
            }
            None => {
                done.push(lead.clone());
                start += 1;
            }
        }
    }
    Ok(Polynomial::from_sorted(&ring, done))
}

/// Multivariate division of `f` by the list `g` (all terms reduced). Zero
/// entries of `g` are ignored; earlier entries are preferred as reducers.
pub fn normal_form<F: Field>(f: &Polynomial<F>, g: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    if g.iter().any(|p| !PolyRing::same(p.ring(), f.ring())) {
        return Err(Error::RingMismatch);
    }
    let reducers: Vec<Reducer<'_, F>> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Reducer {
            poly: p,
            mask: p.leading_monomial().unwrap().support_mask(),
        })
        .collect();
    reduce_with(f, &reducers)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(
    ring: &RingRef<F>,
    gens: &[Polynomial<F>],
    budget: &ComputationBudget,
) -> Result<GroebnerBasis<F>> {
    if gens.iter().any(|p| !PolyRing::same(p.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    budget.stats.runs.fetch_add(1, AtomicOrdering::Relaxed);
    let mut engine = Engine::new(ring, budget);
    let mut inputs: Vec<Polynomial<F>> = gens.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let order = ring.order();
    inputs.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    inputs.dedup();
    for p in inputs {
        let r = engine.reduce(&p)?;
        if !r.is_zero() {
            engine.insert(r.monic())?;
            if engine.found_unit {
                break;
            }
        }
    }
    engine.run()?;
    let basis = engine.into_minimal();
    Ok(reduce_minimal(ring, basis, budget.parallel))
}

struct Engine<'b, F: Field> {
    ring: RingRef<F>,
    budget: &'b ComputationBudget,
    polys: Vec<Polynomial<F>>,
    masks: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    processed: u64,
    found_unit: bool,
}

impl<'b, F: Field> Engine<'b, F> {
    fn new(ring: &RingRef<F>, budget: &'b ComputationBudget) -> Self {
        Engine {
            ring: ring.clone(),
            budget,
            polys: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            processed: 0,
            found_unit: false,
        }
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("nonzero")
    }

    fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let reducers: Vec<Reducer<'_, F>> = (0..self.polys.len())
            .filter(|&i| self.active[i])
            .map(|i| Reducer {
                poly: &self.polys[i],
                mask: self.masks[i],
            })
            .collect();
        reduce_with(f, &reducers)
    }

    fn insert(&mut self, h: Polynomial<F>) -> Result<()> {
        let h_lm = h.leading_monomial().expect("nonzero").clone();
        if h_lm.degree() > self.budget.max_degree {
            return Err(Error::BudgetExceeded {
                resource: BudgetResource::Degree,
                limit: u64::from(self.budget.max_degree),
            });
        }
        if h_lm.is_one() {
            self.found_unit = true;
        }
        let hi = self.polys.len();
        self.masks.push(h_lm.support_mask());
        self.polys.push(h);
        self.active.push(true);
        let nactive = self.active.iter().filter(|a| **a).count();
        if nactive > self.budget.max_basis {
            return Err(Error::BudgetExceeded {
                resource: BudgetResource::BasisSize,
                limit: self.budget.max_basis as u64,
            });
        }
        self.budget
            .stats
            .max_basis
            .fetch_max(nactive as u64, AtomicOrdering::Relaxed);

        // Gebauer–Möller update.
        let candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, h_lm.lcm(self.lm(g))))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = h_lm.is_coprime(self.lm(*g));
            let dominated = !coprime
                && candidates[idx + 1..]
                    .iter()
                    .chain(kept.iter())
                    .any(|(_, l2)| l2.divides(l));
            if !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let before = candidates.len();
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !h_lm.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
            .collect();
        let mut pruned = (before - new_pairs.len()) as u64;

        let old = std::mem::take(&mut self.pairs);
        let mut retained = Vec::with_capacity(old.len() + new_pairs.len());
        for p in old {
            let drop = h_lm.divides(&p.lcm)
                && h_lm.lcm(self.lm(p.i)) != p.lcm
                && h_lm.lcm(self.lm(p.j)) != p.lcm;
            if drop {
                pruned += 1;
            } else {
                retained.push(p);
            }
        }
        retained.extend(new_pairs);
        let order = self.ring.order().clone();
        // Descending, so the smallest lcm pops from the back.
        retained.sort_by(|a, b| {
            order
                .cmp(&b.lcm, &a.lcm)
                .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
        });
        self.pairs = retained;
        self.budget.stats.pruned.fetch_add(pruned, AtomicOrdering::Relaxed);

        for g in 0..hi {
            if self.active[g] && h_lm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        while !self.found_unit {
            let Some(pair) = self.pairs.pop() else {
                break;
            };
            self.processed += 1;
            self.budget.stats.pairs.fetch_add(1, AtomicOrdering::Relaxed);
            if self.processed > self.budget.max_pairs {
                return Err(Error::BudgetExceeded {
                    resource: BudgetResource::Pairs,
                    limit: self.budget.max_pairs,
                });
            }
            if pair.lcm.degree() > self.budget.max_degree {
                return Err(Error::BudgetExceeded {
                    resource: BudgetResource::Degree,
                    limit: u64::from(self.budget.max_degree),
                });
            }
            if self.processed.is_multiple_of(16) {
                self.budget.check_clock()?;
            }
            let s = s_polynomial(&self.polys[pair.i], &self.polys[pair.j])?;
            let r = self.reduce(&s)?;
            if r.is_zero() {
                self.budget
                    .stats
                    .zero_reductions
                    .fetch_add(1, AtomicOrdering::Relaxed);
            } else {
                self.insert(r.monic())?;
            }
        }
        Ok(())
    }

    /// Active elements: a minimal Gröbner basis.
    fn into_minimal(self) -> Vec<Polynomial<F>> {
        if self.found_unit {
            return vec![Polynomial::one(&self.ring)];
        }
        self.polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Tail-reduces a minimal basis (pairwise non-dividing leading monomials),
/// makes it monic and sorts it ascending by leading monomial.
fn reduce_minimal<F: Field>(
    ring: &RingRef<F>,
    minimal: Vec<Polynomial<F>>,
    parallel: bool,
) -> GroebnerBasis<F> {
    let tail_reduce = |i: usize| -> Polynomial<F> {
        let p = &minimal[i];
        let others: Vec<Reducer<'_, F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| Reducer {
                poly: q,
                mask: q.leading_monomial().unwrap().support_mask(),
            })
            .collect();
        let lead = p.leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
        let tail = reduce_with(&tail, &others).expect("same ring");
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(lead);
        terms.extend(tail.into_terms());
        Polynomial::from_sorted(ring, terms).monic()
    };
    let mut elements: Vec<Polynomial<F>> = if parallel {
        (0..minimal.len()).into_par_iter().map(tail_reduce).collect()
    } else {
        (0..minimal.len()).map(tail_reduce).collect()
    };
    let order = ring.order();
    elements.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        reduced: true,
    }
}

/// The unique reduced basis of the ideal generated by the Gröbner basis `g`.
/// Idempotent.
///
/// Elements whose leading monomial is divisible by another leading monomial
/// are reduced rather than dropped, so a generating set that is merely
/// interreducible (such as `{x, x + y}`) still comes out interreduced.
pub fn reduce_basis<F: Field>(g: &GroebnerBasis<F>) -> GroebnerBasis<F> {
    let order = g.ring.order();
    let mut queue: Vec<Polynomial<F>> = g.elements.iter().filter(|p| !p.is_zero()).cloned().collect();
    queue.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    while let Some(p) = queue.pop() {
        let r = normal_form(&p, &minimal).expect("same ring");
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let lm = r.leading_monomial().unwrap().clone();
        let (bumped, kept): (Vec<_>, Vec<_>) = minimal
            .into_iter()
            .partition(|q| lm.divides(q.leading_monomial().unwrap()));
        minimal = kept;
        minimal.push(r);
        queue.extend(bumped);
    }
    reduce_minimal(&g.ring, minimal, false)
}

/// Wraps an arbitrary list as a (claimed) basis; callers are responsible
/// for the Gröbner property.
pub fn basis_from_elements<F: Field>(ring: &RingRef<F>, elements: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        reduced: false,
    }
}

/// Wraps elements known to form a reduced basis, sorted ascending.
pub(crate) fn reduced_from_elements<F: Field>(ring: &RingRef<F>, elements: Vec<Polynomial<F>>) -> GroebnerBasis<F> {
    let mut elements = elements;
    let order = ring.order().clone();
    elements.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        reduced: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::TermOrder;
    use crate::parse::parse_polynomials;

    fn xyz<F: Field>(field: F, order: TermOrder) -> RingRef<F> {
        PolyRing::new(&["x", "y", "z"], field, order).unwrap()
    }

    #[test]
    fn twisted_cubic_like_basis() {
        let r = xyz(Rationals, TermOrder::GrevLex);
        let gens = parse_polynomials(&r, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]).unwrap();
        let gb = buchberger(&r, &gens, &ComputationBudget::default()).unwrap();
        assert!(gb.check_s_pairs().unwrap());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        assert!(normal_form(&gens[0], gb.elements()).unwrap().is_zero());
    }

    #[test]
    fn trivial_bases() {
        let r = xyz(Rationals, TermOrder::GrevLex);
        let x = r.gen("x").unwrap();
        let b = ComputationBudget::default();
        assert_eq!(buchberger(&r, std::slice::from_ref(&x), &b).unwrap().elements(), std::slice::from_ref(&x));
        assert_eq!(
            buchberger(&r, &[x.clone(), x.pow(2)], &b).unwrap().elements(),
            std::slice::from_ref(&x)
        );
        let two_x = Polynomial::from_i64(&r, 2) * x.clone();
        assert_eq!(buchberger(&r, &[two_x], &b).unwrap().elements(), std::slice::from_ref(&x));
        assert!(buchberger(&r, &[], &b).unwrap().is_empty());
    }

    #[test]
    fn reduce_basis_examples() {
        let r = xyz(Rationals, TermOrder::Lex);
        let gens = parse_polynomials(&r, &["x", "x + y"]).unwrap();
        let raw = basis_from_elements(&r, gens);
        let red = reduce_basis(&raw);
        let expect = parse_polynomials(&r, &["y", "x"]).unwrap();
        assert_eq!(red.elements(), expect.as_slice());
        assert_eq!(reduce_basis(&red), red);
    }

    #[test]
    fn normal_form_edge_cases() {
        let r = xyz(PrimeField::default(), TermOrder::GrevLex);
        let x = r.gen("x").unwrap();
        let f = parse_polynomials(&r, &["x^2 + y"]).unwrap().remove(0);
        assert_eq!(normal_form(&f, &[]).unwrap(), f);
        assert!(normal_form(&x.pow(2), std::slice::from_ref(&x)).unwrap().is_zero());
    }

    #[test]
    fn unit_ideal_detected() {
        let r = xyz(PrimeField::default(), TermOrder::GrevLex);
        let gens = parse_polynomials(&r, &["x*y - 1", "x"]).unwrap();
        let gb = buchberger(&r, &gens, &ComputationBudget::default()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let r = xyz(PrimeField::default(), TermOrder::GrevLex);
        let gens = parse_polynomials(&r, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]).unwrap();
        let tight = ComputationBudget::default().with_pairs(1);
        assert!(matches!(
            buchberger(&r, &gens, &tight),
            Err(Error::BudgetExceeded { resource: BudgetResource::Pairs, .. })
        ));
        let low_degree = ComputationBudget::default().with_degree(2);
        assert!(buchberger(&r, &gens, &low_degree).unwrap_err().is_budget());
    }

    #[test]
    fn parallel_mode_is_identical() {
        let r = xyz(PrimeField::default(), TermOrder::GrevLex);
        let gens = parse_polynomials(&r, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y", "x*y*z - 1"]).unwrap();
        let a = buchberger(&r, &gens, &ComputationBudget::default()).unwrap();
        let b = buchberger(&r, &gens, &ComputationBudget::default().with_parallel(true)).unwrap();
        assert_eq!(a, b);
    }
}
