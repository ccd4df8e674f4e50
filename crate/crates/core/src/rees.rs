//! Splittings, spreadings, Rees-algebra presentations, and the named
//! families of prime ideals built from them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{Homogeneity, Multigrading};
use crate::groebner::ComputationBudget;
use crate::ideal::{Ideal, RingMap};
use crate::monomial::{Monomial, TermOrder};
use crate::parse::{parse_polynomial, parse_polynomials};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingRef};

/// One split variable: `var ↦ u_1^{p_1} ⋯ u_n^{p_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBlock {
    pub var: String,
    pub exponents: Vec<u32>,
}

impl SplitBlock {
    /// Names of the new variables: `var_1, …, var_n`, except that a single
    /// new variable with exponent 1 keeps the old name.
    pub fn new_names(&self) -> Vec<String> {
        if self.exponents == [1] {
            vec![self.var.clone()]
        } else {
            (1..=self.exponents.len())
                .map(|j| format!("{}_{j}", self.var))
                .collect()
        }
    }
}

/// Which variables to split and how. Unlisted variables are untouched.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SplittingSpec {
    pub blocks: Vec<SplitBlock>,
}

impl SplittingSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Splits `var` into `n` variables, all with exponent 1.
    pub fn split(mut self, var: &str, n: usize) -> Self {
        self.blocks.push(SplitBlock {
            var: var.to_string(),
            exponents: vec![1; n],
        });
        self
    }

    pub fn split_with(mut self, var: &str, exponents: &[u32]) -> Self {
        self.blocks.push(SplitBlock {
            var: var.to_string(),
            exponents: exponents.to_vec(),
        });
        self
    }

    pub fn block(&self, var: &str) -> Option<&SplitBlock> {
        self.blocks.iter().find(|b| b.var == var)
    }
}

impl fmt::Display for SplittingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if b.exponents.iter().all(|&p| p == 1) {
                write!(f, "{}:{}", b.var, b.exponents.len())?;
            } else {
                let ps: Vec<String> = b.exponents.iter().map(u32::to_string).collect();
                write!(f, "{}:[{}]", b.var, ps.join(","))?;
            }
        }
        Ok(())
    }
}

/// `x:2,y:1` (block sizes, exponents 1) or `x:[2,1]` (explicit exponents).
impl FromStr for SplittingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("splitting spec: {msg}"),
        };
        let mut items = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                ',' if depth == 0 => {
                    items.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        items.push(&s[start..]);
        let mut spec = SplittingSpec::new();
        for item in items.iter().map(|t| t.trim()).filter(|t| !t.is_empty()) {
            let (var, rhs) = item.split_once(':').ok_or_else(|| bad("expected `var:n`"))?;
            let rhs = rhs.trim();
            let exponents = if let Some(inner) = rhs.strip_prefix('[') {
                let inner = inner.strip_suffix(']').ok_or_else(|| bad("unclosed `[`"))?;
                inner
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|_| bad("bad exponent")))
                    .collect::<Result<Vec<_>>>()?
            } else {
                let n: usize = rhs.parse().map_err(|_| bad("bad block size"))?;
                vec![1; n]
            };
            spec.blocks.push(SplitBlock {
                var: var.trim().to_string(),
                exponents,
            });
        }
        Ok(spec)
    }
}

fn derived_order(order: &TermOrder) -> TermOrder {
    if order.restricts_to_subsets() {
        order.clone()
    } else {
        TermOrder::GrevLex
    }
}

/// The substitution map of a splitting.
///
/// A grading on the source is carried over: weights are scaled by the lcm
/// `L` of the block exponent sums, and a new variable in a block with sum
/// `s` gets weight `w * L / s`, so the map is graded up to the factor `L`.
pub fn splitting_map<F: Field>(spec: &SplittingSpec, source: &RingRef<F>) -> Result<RingMap<F>> {
    for (i, b) in spec.blocks.iter().enumerate() {
        source.var_index(&b.var)?;
        if b.exponents.is_empty() || b.exponents.contains(&0) {
            return Err(Error::Domain(format!(
                "block of `{}` needs at least one variable and exponents ≥ 1",
                b.var
            )));
        }
        if spec.blocks[..i].iter().any(|c| c.var == b.var) {
            return Err(Error::Domain(format!("`{}` is split twice", b.var)));
        }
    }
    let mut names = Vec::new();
    let mut slots: Vec<Vec<(usize, u32)>> = Vec::new();
    for v in source.vars() {
        match spec.block(v) {
            Some(b) => {
                let mut slot = Vec::new();
                for (name, &p) in b.new_names().into_iter().zip(&b.exponents) {
                    slot.push((names.len(), p));
                    names.push(name);
                }
                slots.push(slot);
            }
            None => {
                slots.push(vec![(names.len(), 1)]);
                names.push(v.clone());
            }
        }
    }
    let order = derived_order(source.order());
    let target = match source.grading() {
        Some(g) => {
            let sums: Vec<u64> = slots
                .iter()
                .map(|s| s.iter().map(|&(_, p)| u64::from(p)).sum())
                .collect();
            let l = sums.iter().fold(1u64, |acc, &s| acc.lcm(&s)) as i64;
            let weights = g
                .weights()
                .iter()
                .map(|row| {
                    let mut out = vec![0i64; names.len()];
                    for (i, slot) in slots.iter().enumerate() {
                        for &(t, _) in slot {
                            out[t] = row[i] * l / sums[i] as i64;
                        }
                    }
                    out
                })
                .collect();
            PolyRing::with_grading(&names, source.field().clone(), order, Multigrading::new(weights)?)?
        }
        None => PolyRing::new(&names, source.field().clone(), order)?,
    };
    let nt = target.nvars();
    let images = slots
        .iter()
        .map(|slot| {
            let mut exps = vec![0u32; nt];
            for &(t, p) in slot {
                exps[t] = p;
            }
            Ok(Polynomial::monomial(
                &target,
                target.field().one(),
                Monomial::from_exponents(&exps)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    RingMap::new(source, &target, images, vec![])
}

/// `φ(I)` for the splitting `spec`, together with the map.
pub fn split_ideal<F: Field>(ideal: &Ideal<F>, spec: &SplittingSpec) -> Result<(Ideal<F>, RingMap<F>)> {
    let map = splitting_map(spec, ideal.ring())?;
    let image = map.apply_ideal(ideal, &ComputationBudget::default())?;
    Ok((image, map))
}

/// `I + (z - z1, …, z - zn)` in the ring with `z1, …, zn` appended.
pub fn spread_duplicate<F: Field>(ideal: &Ideal<F>, var: usize, count: usize) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if var >= ring.nvars() {
        return Err(Error::Domain("variable index out of range".into()));
    }
    if count == 0 {
        return Ok(ideal.clone());
    }
    let z = &ring.vars()[var];
    let mut names = ring.vars().to_vec();
    names.extend((1..=count).map(|j| format!("{z}{j}")));
    let order = derived_order(ring.order());
    let big = match ring.grading() {
        Some(g) => {
            let w = g
                .weights()
                .iter()
                .map(|row| {
                    let mut r = row.clone();
                    r.extend(std::iter::repeat_n(row[var], count));
                    r
                })
                .collect();
            PolyRing::with_grading(&names, ring.field().clone(), order, Multigrading::new(w)?)?
        }
        None => PolyRing::new(&names, ring.field().clone(), order)?,
    };
    let var_map: Vec<usize> = (0..ring.nvars()).collect();
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&big, &var_map))
        .collect::<Result<Vec<_>>>()?;
    let zb = Polynomial::var(&big, var);
    for j in 0..count {
        gens.push(&zb - &Polynomial::var(&big, ring.nvars() + j));
    }
    Ideal::new(&big, gens)
}

/// All ways to write `e` as an ordered sum of `n` non-negative parts, in
/// lexicographically decreasing order.
fn compositions(e: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![e]];
    }
    let mut out = Vec::new();
    for first in (0..=e).rev() {
        for mut rest in compositions(e - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Spreading of a monomial ideal along `var_i ↦ u_{i1}, …, u_{in_i}` with
/// the fine grading on the new variables: all monomial preimages of the
/// generators, kept in generator order, non-minimal ones dropped.
///
/// New variables are named as for a splitting into `n_i` blocks.
pub fn spread_monomial_fine<F: Field>(ideal: &Ideal<F>, blocks: &[(String, usize)]) -> Result<Ideal<F>> {
    if !ideal.is_monomial() {
        return Err(Error::Unsupported("spreading of a non-monomial ideal".into()));
    }
    let ring = ideal.ring();
    let mut spec = SplittingSpec::new();
    for (v, n) in blocks {
        if *n == 0 {
            return Err(Error::Domain(format!("`{v}` needs at least one new variable")));
        }
        spec = spec.split(v, *n);
    }
    let map = splitting_map(&spec, ring)?;
    let plain = map.target().clone();
    // fine grading: one row per new block variable, zero elsewhere
    let mut block_slots: Vec<Option<(usize, usize)>> = Vec::new(); // source var -> (first target, n)
    let mut next = 0;
    let mut rows = Vec::new();
    for v in ring.vars() {
        match spec.block(v) {
            Some(b) => {
                let n = b.exponents.len();
                for j in 0..n {
                    let mut row = vec![0i64; plain.nvars()];
                    row[next + j] = 1;
                    rows.push(row);
                }
                block_slots.push(Some((next, n)));
                next += n;
            }
            None => {
                block_slots.push(None);
                next += 1;
            }
        }
    }
    let target = plain.graded(Multigrading::new(rows)?)?;
    let nt = target.nvars();
    let mut preimages: Vec<Vec<u32>> = Vec::new();
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        let exps = g.terms()[0].mono.exponents();
        let mut partial: Vec<Vec<u32>> = vec![vec![0; nt]];
        let mut pos = 0;
        for (i, &e) in exps.iter().enumerate() {
            match block_slots[i] {
                None => {
                    for p in &mut partial {
                        p[pos] = e;
                    }
                    pos += 1;
                }
                Some((first, n)) => {
                    let comps = compositions(e, n);
                    let mut grown = Vec::with_capacity(partial.len() * comps.len());
                    for p in &partial {
                        for c in &comps {
                            let mut q = p.clone();
                            q[first..first + n].copy_from_slice(c);
                            grown.push(q);
                        }
                    }
                    partial = grown;
                    pos += n;
                }
            }
        }
        preimages.extend(partial);
    }
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for (i, m) in preimages.iter().enumerate() {
        let redundant = preimages.iter().enumerate().any(|(j, d)| {
            j != i && d.iter().zip(m).all(|(a, b)| a <= b) && (d != m || j < i)
        });
        if !redundant {
            kept.push(m.clone());
        }
    }
    let gens = kept
        .iter()
        .map(|e| {
            Ok(Polynomial::monomial(
                &target,
                target.field().one(),
                Monomial::from_exponents(e)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

/// Rees algebra `A[Jt]`, extended Rees algebra `A[Jt, t^-1]`, or Rees-like
/// algebra `A[Jt, t^2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReesKind {
    Rees,
    Extended,
    ReesLike,
}

impl fmt::Display for ReesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReesKind::Rees => "rees",
            ReesKind::Extended => "extended",
            ReesKind::ReesLike => "reeslike",
        })
    }
}

impl FromStr for ReesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rees" => Ok(ReesKind::Rees),
            "extended" | "extended-rees" => Ok(ReesKind::Extended),
            "reeslike" | "rees-like" => Ok(ReesKind::ReesLike),
            other => Err(Error::Domain(format!("unknown Rees kind `{other}`"))),
        }
    }
}

/// Variable names for the presentation ring: one per generator, plus `T`.
#[derive(Clone, Debug)]
pub struct ReesNames {
    pub z: Vec<String>,
    pub t: String,
}

impl ReesNames {
    pub fn standard(m: usize) -> Self {
        ReesNames {
            z: (1..=m).map(|i| format!("Z{i}")).collect(),
            t: "T".into(),
        }
    }
}

/// The map `ψ: A[Z_1..Z_m, T] -> A[t, u]/(tu - 1)` with `Z_i ↦ a_i t` and
/// `T ↦ u` (extended), `t^2` (Rees-like), or absent (Rees).
///
/// The presentation ring carries the positive grading that makes `ψ`
/// graded: base variables 1, `Z_i` the degree of `a_i` plus the degree of
/// `t`, where `t` has degree -1, 0 or 1 for the three kinds. Left ungraded
/// if some `a_i` is inhomogeneous.
pub fn rees_map<F: Field>(ideal: &Ideal<F>, kind: ReesKind, names: Option<ReesNames>) -> Result<RingMap<F>> {
    let base = ideal.ring();
    let gens = ideal.generators();
    if gens.is_empty() || gens.iter().any(Polynomial::is_zero) {
        return Err(Error::Domain("Rees algebra needs nonzero generators".into()));
    }
    let names = names.unwrap_or_else(|| ReesNames::standard(gens.len()));
    if names.z.len() != gens.len() {
        return Err(Error::Domain(format!(
            "{} names for {} generators",
            names.z.len(),
            gens.len()
        )));
    }
    let nb = base.nvars();
    let mut vars: Vec<String> = base.vars().to_vec();
    vars.extend(names.z.iter().cloned());
    if kind != ReesKind::Rees {
        vars.push(names.t.clone());
    }
    let standard = Multigrading::standard(nb);
    let mut degrees = Vec::with_capacity(gens.len());
    for g in gens {
        match standard.degree_vector(g)? {
            Homogeneity::Homogeneous(d) => degrees.push(d[0]),
            Homogeneity::Inhomogeneous { .. } => {
                degrees.clear();
                break;
            }
        }
    }
    let pres = if degrees.len() == gens.len() {
        let (shift, tw) = match kind {
            ReesKind::Rees => (0, None),
            ReesKind::Extended => (-1, Some(1)),
            ReesKind::ReesLike => (1, Some(2)),
        };
        let mut w = vec![1i64; nb];
        w.extend(degrees.iter().map(|d| d + shift));
        w.extend(tw);
        PolyRing::with_grading(&vars, base.field().clone(), TermOrder::GrevLex, Multigrading::weighted(w))?
    } else {
        PolyRing::new(&vars, base.field().clone(), TermOrder::GrevLex)?
    };

    let mut tvars: Vec<String> = base.vars().to_vec();
    let t_name = crate::ring::fresh_name(tvars.iter().map(String::as_str), "t");
    tvars.push(t_name);
    if kind == ReesKind::Extended {
        let u_name = crate::ring::fresh_name(tvars.iter().map(String::as_str), "u");
        tvars.push(u_name);
    }
    let target = PolyRing::new(&tvars, base.field().clone(), TermOrder::GrevLex)?;
    let t = Polynomial::var(&target, nb);
    let var_map: Vec<usize> = (0..nb).collect();
    let mut images: Vec<Polynomial<F>> = (0..nb).map(|i| Polynomial::var(&target, i)).collect();
    for g in gens {
        images.push(&g.embed(&target, &var_map)? * &t);
    }
    let mut relations = Vec::new();
    match kind {
        ReesKind::Rees => {}
        ReesKind::Extended => {
            let u = Polynomial::var(&target, nb + 1);
            relations.push(&(&t * &u) - &Polynomial::one(&target));
            images.push(u);
        }
        ReesKind::ReesLike => images.push(t.pow(2)),
    }
    RingMap::new(&pres, &target, images, relations)
}

/// A presentation ring, its presenting ideal, and the map `ψ`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    pub kind: ReesKind,
    pub map: RingMap<F>,
    pub prime: Ideal<F>,
}

impl<F: Field> ReesPresentation<F> {
    pub fn ring(&self) -> &RingRef<F> {
        self.map.source()
    }
}

/// `ker ψ`, computed by elimination. Generator order of `J` fixes the
/// numbering of the `Z_i`.
pub fn rees_presentation<F: Field>(
    ideal: &Ideal<F>,
    kind: ReesKind,
    names: Option<ReesNames>,
    budget: &ComputationBudget,
) -> Result<ReesPresentation<F>> {
    let map = rees_map(ideal, kind, names)?;
    let prime = map.kernel(budget)?;
    Ok(ReesPresentation { kind, map, prime })
}

fn ring_xyz<F: Field>(field: F, extra: usize) -> Result<RingRef<F>> {
    let mut names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    names.extend((1..=extra).map(|i| format!("z{i}")));
    let mut w = vec![3, 4, 5];
    w.extend(std::iter::repeat_n(5, extra));
    PolyRing::with_grading(&names, field, TermOrder::GrevLex, Multigrading::weighted(w))
}

/// Generators of the kernel of `x ↦ t^3, y ↦ t^4, z ↦ t^5`.
pub const TORIC345: [&str; 3] = ["x^3 - y*z", "y^2 - x*z", "z^2 - x^2*y"];

/// The kernel of `x ↦ t^3, y ↦ t^4, z ↦ t^5`, computed; the ring is
/// graded by `(3, 4, 5)`.
pub fn family_toric345<F: Field>(field: F, budget: &ComputationBudget) -> Result<Ideal<F>> {
    let src = ring_xyz(field.clone(), 0)?;
    let tgt = PolyRing::new(&["t"], field, TermOrder::GrevLex)?;
    let t = Polynomial::var(&tgt, 0);
    let map = RingMap::new(&src, &tgt, vec![t.pow(3), t.pow(4), t.pow(5)], vec![])?;
    map.kernel(budget)
}

/// `I_m = (x^3 - yz, y^2 - xz, z^2 - x^2 y, z1 - z, …, z_{m-3} - z)` in
/// `k[x, y, z, z1, …, z_{m-3}]`.
pub fn family_im<F: Field>(field: F, m: usize) -> Result<Ideal<F>> {
    if m < 3 {
        return Err(Error::Domain("I_m needs m ≥ 3".into()));
    }
    let ring = ring_xyz(field, m - 3)?;
    let mut gens: Vec<String> = TORIC345.iter().map(|s| s.to_string()).collect();
    gens.extend((1..=m - 3).map(|i| format!("z{i} - z")));
    Ideal::parse(&ring, &gens)
}

/// `φ(I_m)` where `φ` splits the `i`-th variable into `v_i` variables, all
/// exponents 1.
pub fn family_thm51<F: Field>(field: F, m: usize, v: &[usize]) -> Result<(Ideal<F>, RingMap<F>)> {
    if v.len() != m {
        return Err(Error::Domain(format!("{} block sizes for m = {m}", v.len())));
    }
    if v.contains(&0) {
        return Err(Error::Domain("block sizes must be ≥ 1".into()));
    }
    let im = family_im(field, m)?;
    let mut spec = SplittingSpec::new();
    for (name, &n) in im.ring().vars().iter().zip(v) {
        spec = spec.split(name, n);
    }
    split_ideal(&im, &spec)
}

pub const PROP33_J: [&str; 5] = ["a^2*b^2*c", "b^4", "a*b^3", "a^3*b", "a^4"];

pub const PROP33_F: [&str; 18] = [
    "a^4 - Z5*T",
    "a*Z2 - b*Z3",
    "a*Z4 - b*Z5",
    "a*b^3 - Z3*T",
    "a^3*Z3 - b^3*Z5",
    "a^4*Z2 - b^4*Z5",
    "a^2*Z1 - b^2*c*Z5",
    "a^2*b^2*c - Z1*T",
    "Z1*Z5 - c*Z4^2",
    "Z1*Z2 - c*Z3^2",
    "a*Z1 - b*c*Z4",
    "Z1^2 - c^2*Z3*Z4",
    "Z2*T - b^4",
    "Z2^2*Z4 - Z3^3",
    "Z2^3*Z5 - Z3^4",
    "a*c*Z3 - b*Z1",
    "a^3*b - Z4*T",
    "a^2*Z3 - b^2*Z4",
];

pub const PROP33_ALPHA: &str = "a^4*Z2 - a^3*b*Z3 - a*b^3*Z4 + b^4*Z5 - Z2*Z5*T + Z3*Z4*T";

pub const PROP33_BETA: &str = "a^5*Z3 - 2*a^3*b^2*Z4 + a^2*b^3*Z5 - a*Z3*Z5*T + b*Z4^2*T";

/// `J = (a^2 b^2 c, b^4, a b^3, a^3 b, a^4)` in `k[a, b, c]`.
pub fn prop33_j<F: Field>(field: F) -> Result<Ideal<F>> {
    let ring = PolyRing::new(&["a", "b", "c"], field, TermOrder::GrevLex)?;
    Ideal::parse(&ring, &PROP33_J)
}

/// The named elements of the extended Rees presentation of `J`.
#[derive(Clone, Debug)]
pub struct Prop33Elements<F: Field> {
    pub f: Vec<Polynomial<F>>,
    pub alpha: Polynomial<F>,
    pub beta: Polynomial<F>,
}

/// Parses `f_1 … f_18`, `α`, `β` in a ring containing `a, b, c, Z1..Z5, T`.
pub fn prop33_elements<F: Field>(ring: &RingRef<F>) -> Result<Prop33Elements<F>> {
    Ok(Prop33Elements {
        f: parse_polynomials(ring, &PROP33_F)?,
        alpha: parse_polynomial(ring, PROP33_ALPHA)?,
        beta: parse_polynomial(ring, PROP33_BETA)?,
    })
}

/// `ψ` for the extended Rees algebra of `J`, without computing its kernel.
pub fn prop33_map<F: Field>(field: F) -> Result<RingMap<F>> {
    rees_map(&prop33_j(field)?, ReesKind::Extended, None)
}

/// `P_Z` and the named elements.
#[derive(Clone, Debug)]
pub struct Prop33<F: Field> {
    pub presentation: ReesPresentation<F>,
    pub elements: Prop33Elements<F>,
}

pub fn family_prop33<F: Field>(field: F, budget: &ComputationBudget) -> Result<Prop33<F>> {
    let presentation = rees_presentation(&prop33_j(field)?, ReesKind::Extended, None, budget)?;
    let elements = prop33_elements(presentation.ring())?;
    Ok(Prop33 {
        presentation,
        elements,
    })
}

/// The spread construction over `J` with `c` spread into `c_1 … c_n`.
#[derive(Clone, Debug)]
pub struct Thm53<F: Field> {
    pub n: usize,
    /// `spr(J) = (a^2 b^2 c_1, …, a^2 b^2 c_n, b^4, a b^3, a^3 b, a^4)`.
    pub spread: Ideal<F>,
    /// `P_U` in `k[a, b, c_1..c_n, U1..Un, Z2..Z5, T]`.
    pub presentation: ReesPresentation<F>,
    /// `Φ: S_U -> S_Z`, `c_i ↦ c`, `U_i ↦ Z1`, other variables fixed.
    pub phi: RingMap<F>,
}

impl<F: Field> Thm53<F> {
    pub fn ring(&self) -> &RingRef<F> {
        self.presentation.ring()
    }
}

/// Builds `spr(J)`, its extended Rees presentation `P_U`, and `Φ` into the
/// presentation ring of `J` itself.
pub fn family_thm53<F: Field>(field: F, n: usize, budget: &ComputationBudget) -> Result<Thm53<F>> {
    if n == 0 {
        return Err(Error::Domain("n must be ≥ 1".into()));
    }
    let j = prop33_j(field.clone())?;
    let spread = spread_monomial_fine(&j, &[("c".to_string(), n)])?;
    let mut z: Vec<String> = (1..=n).map(|i| format!("U{i}")).collect();
    z.extend((2..=5).map(|i| format!("Z{i}")));
    let presentation = rees_presentation(
        &spread,
        ReesKind::Extended,
        Some(ReesNames { z, t: "T".into() }),
        budget,
    )?;
    let sz = prop33_map(field)?.source().clone();
    let su = presentation.ring().clone();
    let images = su
        .vars()
        .iter()
        .map(|v| {
            let name = if v.starts_with("c") {
                "c"
            } else if v.starts_with('U') {
                "Z1"
            } else {
                v.as_str()
            };
            sz.gen(name)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = RingMap::new(&su, &sz, images, vec![])?;
    Ok(Thm53 {
        n,
        spread,
        presentation,
        phi,
    })
}
