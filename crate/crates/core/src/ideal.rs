//! Ideals and the operations built on Gröbner bases: sums, products, powers,
//! elimination, intersections, quotients, saturations, radical membership,
//! kernels of ring maps, and Krull dimension.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::Multigrading;
use crate::groebner::{buchberger, normal_form, ComputationBudget, GroebnerBasis};
use crate::monomial::TermOrder;
use crate::parse::parse_polynomials;
use crate::poly::Polynomial;
use crate::ring::{fresh_name, PolyRing, RingRef};

/// An ideal given by generators, with its reduced Gröbner basis cached on
/// first use.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &RingRef<F>, gens: &[S]) -> Result<Self> {
        Self::new(ring, parse_polynomials(ring, gens)?)
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by the given variables.
    pub fn of_variables(ring: &RingRef<F>, vars: &[usize]) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vars.iter().map(|&i| Polynomial::var(ring, i)).collect(),
            gb: OnceLock::new(),
        }
    }

    /// The homogeneous maximal ideal of all variables.
    pub fn maximal(ring: &RingRef<F>) -> Self {
        Self::of_variables(ring, &(0..ring.nvars()).collect::<Vec<_>>())
    }

    /// Generators are the given reduced basis; the cache is prefilled.
    pub fn from_basis(gb: GroebnerBasis<F>) -> Self {
        let ideal = Ideal {
            ring: gb.ring().clone(),
            gens: gb.elements().to_vec(),
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis<F>> {
        self.gb.get()
    }

    /// Reduced Gröbner basis in the ring's order; computed once.
    pub fn groebner(&self, budget: &ComputationBudget) -> Result<&GroebnerBasis<F>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.gens, budget)?;
        // A concurrent fill computes the identical reduced basis.
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    /// Canonical generators: the reduced Gröbner basis.
    pub fn canonical(&self, budget: &ComputationBudget) -> Result<Ideal<F>> {
        Ok(Ideal::from_basis(self.groebner(budget)?.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn is_unit(&self, budget: &ComputationBudget) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        Ok(self.groebner(budget)?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        self.groebner(budget)?.contains(f)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equal reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner(budget)?.elements() == other.groebner(budget)?.elements())
    }

    /// Every generator is a monomial.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    pub fn is_homogeneous(&self, grading: &Multigrading, budget: &ComputationBudget) -> Result<bool> {
        if self.gens.iter().all(|g| grading.is_homogeneous(g)) {
            return Ok(true);
        }
        Ok(self
            .groebner(budget)?
            .elements()
            .iter()
            .all(|g| grading.is_homogeneous(g)))
    }

    fn check_ring(&self, other: &Ideal<F>) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a * b;
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Products of all multisets of `e` generators.
    pub fn power(&self, e: u32) -> Result<Ideal<F>> {
        if e < 1 {
            return Err(Error::Domain("ideal power exponent must be at least 1".into()));
        }
        let base: Vec<&Polynomial<F>> = self.gens.iter().filter(|g| !g.is_zero()).collect();
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        // (product, index of last factor) for non-decreasing index sequences
        let mut layer: Vec<(Polynomial<F>, usize)> =
            base.iter().enumerate().map(|(i, g)| ((*g).clone(), i)).collect();
        for _ in 1..e {
            let mut next = Vec::new();
            for (p, last) in &layer {
                for (j, g) in base.iter().enumerate().skip(*last) {
                    next.push((p * *g, j));
                }
            }
            layer = next;
        }
        for (p, _) in layer {
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the ring on the
    /// remaining variables.
    pub fn eliminate(&self, vars: &[usize], budget: &ComputationBudget) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        if vars.iter().any(|&v| v >= n) {
            return Err(Error::Domain("variable index out of range".into()));
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let keep: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        let elim: Vec<usize> = (0..n).filter(|i| vars.contains(i)).collect();
        let names: Vec<&String> = keep.iter().map(|&i| &self.ring.vars()[i]).collect();
        let order = if self.ring.order().restricts_to_subsets() {
            self.ring.order().clone()
        } else {
            TermOrder::GrevLex
        };
        let small = match self.ring.grading() {
            Some(g) => {
                let w = g
                    .weights()
                    .iter()
                    .map(|row| keep.iter().map(|&i| row[i]).collect())
                    .collect();
                PolyRing::with_grading(&names, self.ring.field().clone(), order, Multigrading::new(w)?)?
            }
            None => PolyRing::new(&names, self.ring.field().clone(), order)?,
        };
        let elim_names: Vec<String> = elim.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let ext = Extension::new(&small, &elim_names)?;
        let mut var_map = vec![0; n];
        for (pos, &i) in elim.iter().enumerate() {
            var_map[i] = pos;
        }
        for (pos, &i) in keep.iter().enumerate() {
            var_map[i] = ext.k + pos;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(&ext.ring, &var_map))
            .collect::<Result<Vec<_>>>()?;
        ext.contract(&gens, budget)
    }

    pub fn intersect(&self, other: &Ideal<F>, budget: &ComputationBudget) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let t_name = self.ring.fresh_name("t");
        let ext = Extension::new(&self.ring, &[t_name])?;
        let t = Polynomial::var(&ext.ring, 0);
        let one_minus_t = &Polynomial::one(&ext.ring) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&t * &ext.lift(g)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &ext.lift(g)?);
        }
        ext.contract(&gens, budget)
    }

    /// `I : f = (I ∩ (f)) / f`.
    pub fn quotient(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<Ideal<F>> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::Domain("quotient by the zero polynomial".into()));
        }
        if f.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let cap = self.intersect(&principal, budget)?;
        let mut gens = Vec::with_capacity(cap.gens.len());
        for g in &cap.gens {
            let q = g
                .divide_exact(f)?
                .expect("every element of I ∩ (f) is a multiple of f");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    /// The quotients run in parallel and are intersected pairwise.
    pub fn quotient_ideal(&self, other: &Ideal<F>, budget: &ComputationBudget) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let gens: Vec<&Polynomial<F>> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        let mut layer: Vec<Ideal<F>> = gens
            .par_iter()
            .map(|g| self.quotient(g, budget))
            .collect::<Result<_>>()?;
        while layer.len() > 1 {
            layer = layer
                .par_chunks(2)
                .map(|pair| match pair {
                    [a, b] => a.intersect(b, budget),
                    [a] => Ok(a.clone()),
                    _ => unreachable!(),
                })
                .collect::<Result<_>>()?;
        }
        Ok(layer.pop().unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : f^∞` by iterated quotients. Returns the saturation and the first
    /// exponent `k` with `I : f^k = I : f^(k+1)`.
    pub fn saturate(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<(Ideal<F>, u32)> {
        let mut current = self.clone();
        let mut k = 0;
        loop {
            let next = current.quotient(f, budget)?;
            if next.equals(&current, budget)? {
                return Ok((current, k));
            }
            current = next;
            k += 1;
        }
    }

    /// `I : f^∞` as `(I + (1 - y f)) ∩ R`.
    pub fn saturate_rabinowitsch(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::Domain("saturation by the zero polynomial".into()));
        }
        let y_name = self.ring.fresh_name("y");
        let ext = Extension::new(&self.ring, &[y_name])?;
        let y = Polynomial::var(&ext.ring, 0);
        let mut gens = self
            .gens
            .iter()
            .map(|g| ext.lift(g))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(&ext.ring) - &(&y * &ext.lift(f)?));
        ext.contract(&gens, budget)
    }

    /// `I : J^∞` by iterated ideal quotients, with the stabilization exponent.
    pub fn saturate_ideal(&self, other: &Ideal<F>, budget: &ComputationBudget) -> Result<(Ideal<F>, u32)> {
        let mut current = self.clone();
        let mut k = 0;
        loop {
            let next = current.quotient_ideal(other, budget)?;
            if next.equals(&current, budget)? {
                return Ok((current, k));
            }
            current = next;
            k += 1;
        }
    }

    /// Whether `f ∈ √I`: `1 ∈ I + (1 - y f)` with a fresh variable `y`.
    pub fn radical_contains(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let y_name = self.ring.fresh_name("y");
        let ext = Extension::new(&self.ring, &[y_name])?;
        let y = Polynomial::var(&ext.ring, 0);
        let mut gens = self
            .gens
            .iter()
            .map(|g| ext.lift(g))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(&ext.ring) - &(&y * &ext.lift(f)?));
        Ok(buchberger(&ext.ring, &gens, budget)?.is_unit())
    }

    /// Krull dimension of `R/I`: the largest set of variables independent
    /// modulo the leading-term ideal. `-1` for the unit ideal.
    pub fn dimension(&self, budget: &ComputationBudget) -> Result<i64> {
        let n = self.ring.nvars();
        if n > 64 {
            return Err(Error::Unsupported("dimension for more than 64 variables".into()));
        }
        let gb = self.groebner(budget)?;
        if gb.is_unit() {
            return Ok(-1);
        }
        let mut supports: Vec<u64> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect();
        supports.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|m| m & s == *m) {
                minimal.push(s);
            }
        }
        let mut best = n + 1;
        min_hitting_set(&minimal, 0, &mut best);
        Ok((n - best.min(n)) as i64)
    }

    /// `nvars - dimension`; `nvars + 1` for the unit ideal.
    pub fn height(&self, budget: &ComputationBudget) -> Result<i64> {
        Ok(self.ring.nvars() as i64 - self.dimension(budget)?)
    }

    /// Moves the ideal to `target`, sending variable `i` to `var_map[i]`.
    pub fn embed(&self, target: &RingRef<F>, var_map: &[usize]) -> Result<Ideal<F>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target, var_map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Same generators in a ring with the same variable names (matching by
    /// name), e.g. under another term order.
    pub fn transport(&self, target: &RingRef<F>) -> Result<Ideal<F>> {
        let var_map = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect::<Result<Vec<_>>>()?;
        self.embed(target, &var_map)
    }
}

/// Branch on the variables of the first un-hit support.
fn min_hitting_set(sets: &[u64], chosen: u64, best: &mut usize) {
    let size = chosen.count_ones() as usize;
    if size >= *best {
        return;
    }
    match sets.iter().find(|s| *s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            if size + 1 >= *best {
                return;
            }
            let mut bits = s;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                min_hitting_set(sets, chosen | v, best);
                bits &= bits - 1;
            }
        }
    }
}

/// `target` with `k` extra leading variables and an order eliminating them.
struct Extension<F: Field> {
    ring: RingRef<F>,
    target: RingRef<F>,
    k: usize,
}

impl<F: Field> Extension<F> {
    fn new(target: &RingRef<F>, extra: &[String]) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(extra.len() + target.nvars());
        for e in extra {
            let fresh = fresh_name(
                target.vars().iter().chain(names.iter()).map(String::as_str),
                e,
            );
            names.push(fresh);
        }
        names.extend(target.vars().iter().cloned());
        let second = if target.order().restricts_to_subsets() {
            target.order().clone()
        } else {
            TermOrder::GrevLex
        };
        let ring = PolyRing::new(&names, target.field().clone(), TermOrder::elimination(extra.len(), second))?;
        Ok(Extension {
            ring,
            target: target.clone(),
            k: extra.len(),
        })
    }

    fn lift(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let var_map: Vec<usize> = (0..self.target.nvars()).map(|i| i + self.k).collect();
        f.embed(&self.ring, &var_map)
    }

    /// Eliminates the extra variables from the ideal generated by `gens`.
    fn contract(&self, gens: &[Polynomial<F>], budget: &ComputationBudget) -> Result<Ideal<F>> {
        let gb = buchberger(&self.ring, gens, budget)?;
        let var_map: Vec<usize> = (0..self.ring.nvars()).map(|i| i.saturating_sub(self.k)).collect();
        let mut kept = Vec::new();
        for g in gb.elements() {
            if g.support().iter().all(|&i| i >= self.k) {
                kept.push(g.embed(&self.target, &var_map)?);
            }
        }
        if self.target.order().restricts_to_subsets() {
            // The restricted order is the target order: `kept` is already the
            // reduced basis of the elimination ideal.
            Ok(Ideal::from_basis(crate::groebner::reduced_from_elements(&self.target, kept)))
        } else {
            let ideal = Ideal::new(&self.target, kept)?;
            ideal.groebner(budget)?;
            Ok(ideal)
        }
    }
}

/// An algebra map `source -> target` given by the images of the source
/// variables, optionally modulo relations in the target (for instance
/// `t*u - 1` to model `t^-1` by `u`).
#[derive(Clone)]
pub struct RingMap<F: Field> {
    source: RingRef<F>,
    target: RingRef<F>,
    images: Vec<Polynomial<F>>,
    relations: Vec<Polynomial<F>>,
    relation_basis: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> fmt::Debug for RingMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, img) in self.source.vars().iter().zip(&self.images) {
            writeln!(f, "{v} -> {img}")?;
        }
        Ok(())
    }
}

impl<F: Field> RingMap<F> {
    pub fn new(
        source: &RingRef<F>,
        target: &RingRef<F>,
        images: Vec<Polynomial<F>>,
        relations: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::Domain(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if images
            .iter()
            .chain(&relations)
            .any(|p| !PolyRing::same(p.ring(), target))
        {
            return Err(Error::RingMismatch);
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
            relations,
            relation_basis: OnceLock::new(),
        })
    }

    pub fn source(&self) -> &RingRef<F> {
        &self.source
    }

    pub fn target(&self) -> &RingRef<F> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    fn relation_basis(&self, budget: &ComputationBudget) -> Result<&GroebnerBasis<F>> {
        if let Some(gb) = self.relation_basis.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.target, &self.relations, budget)?;
        let _ = self.relation_basis.set(gb);
        Ok(self.relation_basis.get().expect("just set"))
    }

    /// Image of `f`, normal-formed against the relations.
    pub fn apply(&self, f: &Polynomial<F>, budget: &ComputationBudget) -> Result<Polynomial<F>> {
        if !PolyRing::same(f.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let img = f.substitute(&self.target, &self.images)?;
        if self.relations.is_empty() {
            Ok(img)
        } else {
            normal_form(&img, self.relation_basis(budget)?.elements())
        }
    }

    /// The ideal of the target generated by the images of the generators.
    pub fn apply_ideal(&self, ideal: &Ideal<F>, budget: &ComputationBudget) -> Result<Ideal<F>> {
        if !PolyRing::same(ideal.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.apply(g, budget))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.target, gens.into_iter().filter(|g| !g.is_zero()).collect())
    }

    /// Kernel of the map, by eliminating the target variables from the graph
    /// ideal `(x_i - image_i) + relations`.
    ///
    /// A source variable whose image is a bare target variable is identified
    /// with it up front instead of eliminating the duplicate.
    pub fn kernel(&self, budget: &ComputationBudget) -> Result<Ideal<F>> {
        let nt = self.target.nvars();
        let ns = self.source.nvars();
        // identified[t] = Some(s) when target variable t is replaced by source variable s
        let mut identified: Vec<Option<usize>> = vec![None; nt];
        let mut graph_needed = vec![true; ns];
        for (s, img) in self.images.iter().enumerate() {
            if img.len() == 1 {
                let t = &img.terms()[0];
                if t.mono.degree() == 1 && self.target.field().is_one(&t.coeff) {
                    let tv = t.mono.support()[0];
                    if identified[tv].is_none() {
                        identified[tv] = Some(s);
                        graph_needed[s] = false;
                    }
                }
            }
        }
        let elim: Vec<usize> = (0..nt).filter(|&t| identified[t].is_none()).collect();
        let elim_names: Vec<String> = elim.iter().map(|&t| self.target.vars()[t].clone()).collect();
        let ext = Extension::new(&self.source, &elim_names)?;
        let mut tmap = vec![0; nt];
        for (pos, &t) in elim.iter().enumerate() {
            tmap[t] = pos;
        }
        for t in 0..nt {
            if let Some(s) = identified[t] {
                tmap[t] = ext.k + s;
            }
        }
        // target variables may be merged onto the same slot only if distinct,
        // which holds since each identified t maps to its own source variable
        let from_target = |p: &Polynomial<F>| -> Result<Polynomial<F>> {
            let terms = p
                .terms()
                .iter()
                .map(|t| {
                    let mut exps = vec![0u32; ext.ring.nvars()];
                    for (i, &e) in t.mono.exponents().iter().enumerate() {
                        exps[tmap[i]] += e;
                    }
                    Ok((t.coeff.clone(), crate::monomial::Monomial::from_exponents(&exps)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Polynomial::from_terms(&ext.ring, terms)
        };
        let mut gens = Vec::new();
        for s in 0..ns {
            if graph_needed[s] {
                let xs = Polynomial::var(&ext.ring, ext.k + s);
                gens.push(&xs - &from_target(&self.images[s])?);
            }
        }
        for r in &self.relations {
            gens.push(from_target(r)?);
        }
        ext.contract(&gens, budget)
    }
}

/// `f ∈ I`.
pub fn member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
    ideal.contains(f, budget)
}

/// Equality of ideals via reduced Gröbner bases.
pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
    a.equals(b, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn budget() -> ComputationBudget {
        ComputationBudget::default()
    }

    fn ring3() -> RingRef<PrimeField> {
        PolyRing::new(&["x", "y", "z"], PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    fn ideal(r: &RingRef<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn powers_and_products() {
        let r = ring3();
        let b = budget();
        let m = ideal(&r, &["x", "y"]);
        let sq = m.power(2).unwrap();
        assert_eq!(sq.generators().len(), 3);
        assert!(sq.equals(&ideal(&r, &["x^2", "x*y", "y^2"]), &b).unwrap());
        assert!(m.power(1).unwrap().equals(&m, &b).unwrap());
        assert!(m.power(0).is_err());
        let p = ideal(&r, &["x"]).product(&ideal(&r, &["y"])).unwrap();
        assert!(p.equals(&ideal(&r, &["x*y"]), &b).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = ring3();
        let b = budget();
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x + y"]), &b).unwrap());
        assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"]), &b).unwrap());
        assert!(!ideal(&r, &["x"]).contains(&Polynomial::one(&r), &b).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring3();
        let b = budget();
        let cap = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"]), &b).unwrap();
        assert!(cap.equals(&ideal(&r, &["x*y"]), &b).unwrap());
        let i = ideal(&r, &["x^2 - y", "y*z"]);
        assert!(i.intersect(&i, &b).unwrap().equals(&i, &b).unwrap());
    }

    #[test]
    fn quotients() {
        let r = ring3();
        let b = budget();
        let i = ideal(&r, &["x^2", "x*y"]);
        let x = r.gen("x").unwrap();
        assert!(i.quotient(&x, &b).unwrap().equals(&ideal(&r, &["x", "y"]), &b).unwrap());
        assert!(i
            .quotient(&Polynomial::one(&r), &b)
            .unwrap()
            .equals(&i, &b)
            .unwrap());
        assert!(matches!(i.quotient(&Polynomial::zero(&r), &b), Err(Error::Domain(_))));
        assert!(i
            .quotient_ideal(&Ideal::zero(&r), &b)
            .unwrap()
            .is_unit(&b)
            .unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring3();
        let b = budget();
        let x = r.gen("x").unwrap();
        let (sat, k) = ideal(&r, &["x^2*y", "x*y^2"]).saturate(&x, &b).unwrap();
        assert!(sat.equals(&ideal(&r, &["y"]), &b).unwrap());
        assert_eq!(k, 2);
        let (sat, _) = ideal(&r, &["x^3"]).saturate(&x, &b).unwrap();
        assert!(sat.is_unit(&b).unwrap());
        let prime = ideal(&r, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        let (sat, k) = prime.saturate(&x, &b).unwrap();
        assert_eq!(k, 0);
        assert!(sat.equals(&prime, &b).unwrap());
        let rab = ideal(&r, &["x^2*y", "x*y^2"]).saturate_rabinowitsch(&x, &b).unwrap();
        assert!(rab.equals(&ideal(&r, &["y"]), &b).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring3();
        let b = budget();
        let x = r.gen("x").unwrap();
        let y = r.gen("y").unwrap();
        assert!(ideal(&r, &["x^2"]).radical_contains(&x, &b).unwrap());
        assert!(!ideal(&r, &["x"]).radical_contains(&y, &b).unwrap());
    }

    #[test]
    fn elimination() {
        let r = PolyRing::new(&["t", "x", "y", "z"], Rationals, TermOrder::GrevLex).unwrap();
        let b = budget();
        let i = Ideal::parse(&r, &["x - t^3", "y - t^4", "z - t^5"]).unwrap();
        let e = i.eliminate(&[0], &b).unwrap();
        assert_eq!(e.ring().vars(), &["x", "y", "z"]);
        let expect = Ideal::parse(e.ring(), &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]).unwrap();
        assert!(e.equals(&expect, &b).unwrap());
        let lin = Ideal::parse(&r, &["x - t"]).unwrap().eliminate(&[0], &b).unwrap();
        assert!(lin.groebner(&b).unwrap().is_empty());
        assert!(i.eliminate(&[], &b).unwrap().equals(&i, &b).unwrap());
    }

    #[test]
    fn kernels() {
        let b = budget();
        let src = PolyRing::new(&["x", "y", "z"], Rationals, TermOrder::GrevLex).unwrap();
        let tgt = PolyRing::new(&["t"], Rationals, TermOrder::GrevLex).unwrap();
        let t = tgt.gen("t").unwrap();
        let map = RingMap::new(&src, &tgt, vec![t.pow(3), t.pow(4), t.pow(5)], vec![]).unwrap();
        let k = map.kernel(&b).unwrap();
        let expect = Ideal::parse(&src, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]).unwrap();
        assert!(k.equals(&expect, &b).unwrap());

        let id = RingMap::new(&src, &src, src.gens(), vec![]).unwrap();
        assert!(id.kernel(&b).unwrap().groebner(&b).unwrap().is_empty());

        let src2 = PolyRing::new(&["x", "y"], Rationals, TermOrder::GrevLex).unwrap();
        let diag = RingMap::new(&src2, &tgt, vec![t.clone(), t.clone()], vec![]).unwrap();
        let k = diag.kernel(&b).unwrap();
        assert!(k.equals(&Ideal::parse(&src2, &["x - y"]).unwrap(), &b).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = ring3();
        let b = budget();
        let p = ideal(&r, &["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"]);
        assert_eq!(p.dimension(&b).unwrap(), 1);
        assert_eq!(p.height(&b).unwrap(), 2);
        assert_eq!(Ideal::zero(&r).dimension(&b).unwrap(), 3);
        assert_eq!(Ideal::unit(&r).dimension(&b).unwrap(), -1);
        assert_eq!(ideal(&r, &["x*y", "x*z"]).dimension(&b).unwrap(), 2);
    }

    #[test]
    fn apply_map_with_relations() {
        let b = budget();
        let src = PolyRing::new(&["x"], Rationals, TermOrder::GrevLex).unwrap();
        let tgt = PolyRing::new(&["t", "u"], Rationals, TermOrder::GrevLex).unwrap();
        let t = tgt.gen("t").unwrap();
        let u = tgt.gen("u").unwrap();
        let rel = &(&t * &u) - &Polynomial::one(&tgt);
        let map = RingMap::new(&src, &tgt, vec![&t * &u], vec![rel]).unwrap();
        let x = src.gen("x").unwrap();
        assert_eq!(map.apply(&x, &b).unwrap(), Polynomial::one(&tgt));
        assert!(map
            .apply_ideal(&Ideal::zero(&src), &b)
            .unwrap()
            .is_zero());
    }
}
