//! Associated primes: witness certificates, the graded maximal-ideal test,
//! the colon-saturation components of a split primary ideal, and verifiers
//! for the named families.
//!
//! Membership in `Ass(R/I)` is certified by a witness `w ∉ I` with
//! `I : w = Q`. Non-membership is only claimed where an exact criterion
//! exists: `I : Q = I` rules `Q` out, the graded maximal ideal is decided by
//! saturation, and monomial ideals go through [`MonomialIdeal`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::grading::Multigrading;
use crate::groebner::{buchberger, ComputationBudget};
use crate::ideal::Ideal;
use crate::monomial::TermOrder;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::rees::{family_prop33, family_thm51, family_thm53, prop33_elements, prop33_map, SplittingSpec};
use crate::report::{verdict, Check, CheckStatus, Report};
use crate::ring::{PolyRing, RingRef};

/// Random combinations tried by [`find_witness`] after the generators.
pub const WITNESS_TRIALS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssStatus {
    Verified,
    WitnessNotFound,
    Refuted,
}

/// A claim `Q ∈ Ass(R/I)` with its witness.
#[derive(Clone, Debug)]
pub struct AssCertificate<F: Field> {
    pub ideal: Ideal<F>,
    pub prime: Ideal<F>,
    pub witness: Option<Polynomial<F>>,
    pub status: AssStatus,
}

impl<F: Field> AssCertificate<F> {
    pub fn is_verified(&self) -> bool {
        self.status == AssStatus::Verified
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prime": strings(self.prime.generators()),
            "witness": self.witness.as_ref().map(|w| w.to_string()),
            "status": self.status,
        })
    }
}

pub(crate) fn strings<F: Field>(polys: &[Polynomial<F>]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

/// Verified iff `w ∉ I` and `I : w = Q`.
pub fn certify_witness<F: Field>(
    ideal: &Ideal<F>,
    prime: &Ideal<F>,
    w: &Polynomial<F>,
    budget: &ComputationBudget,
) -> Result<AssCertificate<F>> {
    let status = if ideal.contains(w, budget)? {
        AssStatus::Refuted
    } else if ideal.quotient(w, budget)?.equals(prime, budget)? {
        AssStatus::Verified
    } else {
        AssStatus::Refuted
    };
    Ok(AssCertificate {
        ideal: ideal.clone(),
        prime: prime.clone(),
        witness: Some(w.clone()),
        status,
    })
}

/// Searches `I : Q` for a witness: its reduced basis in ascending order,
/// then [`WITNESS_TRIALS`] random combinations drawn from `seed`.
/// `WitnessNotFound` is inconclusive.
pub fn find_witness<F: Field>(
    ideal: &Ideal<F>,
    prime: &Ideal<F>,
    seed: u64,
    budget: &ComputationBudget,
) -> Result<AssCertificate<F>> {
    let colon = ideal.quotient_ideal(prime, budget)?;
    let gens: Vec<Polynomial<F>> = colon.groebner(budget)?.elements().to_vec();
    let mut outside = Vec::new();
    for g in &gens {
        if !ideal.contains(g, budget)? {
            outside.push(g.clone());
        }
    }
    for g in &outside {
        let cert = certify_witness(ideal, prime, g, budget)?;
        if cert.is_verified() {
            return Ok(cert);
        }
    }
    if !outside.is_empty() {
        let field = ideal.ring().field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..WITNESS_TRIALS {
            let mut w = Polynomial::zero(ideal.ring());
            for g in &gens {
                w = &w + &g.scalar_mul(&field.random_nonzero(&mut rng));
            }
            if w.is_zero() {
                continue;
            }
            let cert = certify_witness(ideal, prime, &w, budget)?;
            if cert.is_verified() {
                return Ok(cert);
            }
        }
    }
    Ok(AssCertificate {
        ideal: ideal.clone(),
        prime: prime.clone(),
        witness: None,
        status: AssStatus::WitnessNotFound,
    })
}

/// A positive grading under which `ideal` is homogeneous: the ring's own if
/// it qualifies, else the standard one.
fn positive_grading<F: Field>(ideal: &Ideal<F>, budget: &ComputationBudget) -> Result<Multigrading> {
    if let Some(g) = ideal.ring().grading() {
        if g.is_positive() && ideal.is_homogeneous(g, budget)? {
            return Ok(g.clone());
        }
    }
    let standard = Multigrading::standard(ideal.ring().nvars());
    if ideal.is_homogeneous(&standard, budget)? {
        Ok(standard)
    } else {
        Err(Error::Domain("ideal is not homogeneous for a positive grading".into()))
    }
}

/// Whether the homogeneous maximal ideal `M` is associated to `I`, i.e.
/// `I : M^∞ ≠ I`.
///
/// The saturation chain `I ⊆ I : M ⊆ I : M^2 ⊆ …` is stable from the start
/// exactly when `I : M = I`, so a single quotient decides it.
pub fn graded_max_test<F: Field>(ideal: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
    positive_grading(ideal, budget)?;
    let ring = ideal.ring();
    let vars: Vec<Polynomial<F>> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    let quotients = vars
        .par_iter()
        .map(|x| ideal.quotient(x, budget))
        .collect::<Result<Vec<_>>>()?;
    // I : M ⊆ I : x_i, so one variable with I : x_i = I settles it.
    for q in &quotients {
        if q.equals(ideal, budget)? {
            return Ok(false);
        }
    }
    let Some((first, rest)) = quotients.split_first() else {
        return Ok(false);
    };
    let mut acc = first.clone();
    for q in rest {
        acc = acc.intersect(q, budget)?;
    }
    Ok(!acc.equals(ideal, budget)?)
}

/// One component `φ(q) : (∏_{j≠i} u_j)^∞`.
#[derive(Clone, Debug)]
pub struct Component<F: Field> {
    pub ideal: Ideal<F>,
    /// `J A[U] + (u_i)` when the base prime `J` was supplied.
    pub prime: Option<Ideal<F>>,
    pub stabilization: u32,
    pub radical_verified: bool,
    pub irredundant: bool,
    pub saturated: bool,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport<F: Field> {
    /// `φ(q)`.
    pub input: Ideal<F>,
    pub split_vars: Vec<usize>,
    pub components: Vec<Component<F>>,
    pub intersection_equal: bool,
    pub embedded_count: usize,
}

impl<F: Field> DecompositionReport<F> {
    pub fn verified(&self) -> bool {
        self.intersection_equal
            && self
                .components
                .iter()
                .all(|c| c.radical_verified && c.irredundant && c.saturated)
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                json!({
                    "generators": strings(c.ideal.generators()),
                    "prime": c.prime.as_ref().map(|p| strings(p.generators())),
                    "stabilization": c.stabilization,
                    "radical_verified": c.radical_verified,
                    "irredundant": c.irredundant,
                    "saturated": c.saturated,
                })
            })
            .collect();
        json!({
            "input": strings(self.input.generators()),
            "components": comps,
            "intersection_equal": self.intersection_equal,
            "embedded_count": self.embedded_count,
        })
    }
}

fn intersect_all<F: Field>(ring: &RingRef<F>, ideals: &[&Ideal<F>], budget: &ComputationBudget) -> Result<Ideal<F>> {
    let mut acc: Option<Ideal<F>> = None;
    for i in ideals {
        acc = Some(match acc {
            None => (*i).clone(),
            Some(a) => a.intersect(i, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ring)))
}

/// Splits `z ↦ u_1 ⋯ u_n` and decomposes `φ(q)` into the saturations
/// `φ(q) : (∏_{j≠i} u_j)^∞`.
///
/// `base_prime` optionally gives generators of `J = √q ∩ A` (in the ring of
/// `q`, free of `z`); then each component's radical is pinned to
/// `J A[U] + (u_i)` by `J + (u_i) ⊆ √C_i` and `C_i ⊆ J + (u_i)`. Without it
/// only `u_i ∈ √C_i` and `u_j ∉ √C_i` are checked.
pub fn lemma15_components<F: Field>(
    q: &Ideal<F>,
    z: &str,
    n: usize,
    base_prime: Option<&[Polynomial<F>]>,
    budget: &ComputationBudget,
) -> Result<DecompositionReport<F>> {
    let ring = q.ring();
    let zi = ring.var_index(z)?;
    if n == 0 {
        return Err(Error::Domain("n must be ≥ 1".into()));
    }
    if !q.radical_contains(&Polynomial::var(ring, zi), budget)? {
        return Err(Error::Precondition(format!("no power of `{z}` lies in q")));
    }
    let map = crate::rees::splitting_map(&SplittingSpec::new().split(z, n), ring)?;
    let target = map.target().clone();
    let phi_q = map.apply_ideal(q, budget)?;
    let split_vars: Vec<usize> = map.images()[zi].support();
    let us: Vec<Polynomial<F>> = split_vars.iter().map(|&i| Polynomial::var(&target, i)).collect();
    let base: Option<Vec<Polynomial<F>>> = match base_prime {
        Some(gens) => Some(gens.iter().map(|g| map.apply(g, budget)).collect::<Result<_>>()?),
        None => None,
    };

    let mut ideals = Vec::with_capacity(n);
    let mut exps = Vec::with_capacity(n);
    for i in 0..n {
        let mut others = Polynomial::one(&target);
        for (j, u) in us.iter().enumerate() {
            if j != i {
                others = &others * u;
            }
        }
        let (c, k) = phi_q.saturate(&others, budget)?;
        ideals.push(c);
        exps.push(k);
    }
    let all: Vec<&Ideal<F>> = ideals.iter().collect();
    let intersection_equal = intersect_all(&target, &all, budget)?.equals(&phi_q, budget)?;

    let mut components = Vec::with_capacity(n);
    let mut embedded_count = 0;
    for i in 0..n {
        let c = &ideals[i];
        let rest: Vec<&Ideal<F>> = (0..n).filter(|&j| j != i).map(|j| &ideals[j]).collect();
        let irredundant = if rest.is_empty() {
            !phi_q.is_unit(budget)?
        } else {
            !intersect_all(&target, &rest, budget)?.equals(&phi_q, budget)?
        };
        let mut radical_verified = c.radical_contains(&us[i], budget)?;
        let mut contains_other = false;
        for (j, u) in us.iter().enumerate() {
            if j != i && c.radical_contains(u, budget)? {
                radical_verified = false;
                contains_other = true;
            }
        }
        let prime = match &base {
            Some(gens) => {
                let mut pg = gens.clone();
                pg.push(us[i].clone());
                let p = Ideal::new(&target, pg)?;
                for g in p.generators() {
                    radical_verified &= c.radical_contains(g, budget)?;
                }
                radical_verified &= c.is_subset(&p, budget)?;
                Some(p)
            }
            None => None,
        };
        if contains_other {
            embedded_count += 1;
        }
        let mut saturated = true;
        for (j, u) in us.iter().enumerate() {
            if j != i {
                saturated &= c.quotient(u, budget)?.equals(c, budget)?;
            }
        }
        components.push(Component {
            ideal: c.clone(),
            prime,
            stabilization: exps[i],
            radical_verified,
            irredundant,
            saturated,
        });
    }
    Ok(DecompositionReport {
        input: phi_q,
        split_vars,
        components,
        intersection_equal,
        embedded_count,
    })
}

/// Moves `f` into `target`, matching variables by name.
pub fn embed_by_name<F: Field>(f: &Polynomial<F>, target: &RingRef<F>) -> Result<Polynomial<F>> {
    let mut var_map = vec![0; f.ring().nvars()];
    for i in f.support() {
        var_map[i] = target.var_index(&f.ring().vars()[i])?;
    }
    f.embed(target, &var_map)
}

fn variable_free<F: Field>(ideal: &Ideal<F>, budget: &ComputationBudget) -> Result<bool> {
    for i in 0..ideal.ring().nvars() {
        if ideal.contains(&Polynomial::var(ideal.ring(), i), budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn var_names<F: Field>(ring: &RingRef<F>, vars: &[usize]) -> String {
    let names: Vec<&str> = vars.iter().map(|&i| ring.vars()[i].as_str()).collect();
    format!("({})", names.join(","))
}

/// Embedded primes of `P^e` for `P = φ(I_m)`, the `v_i`-fold splitting of
/// `I_m`.
///
/// The associated primes of `I_m^e` (`e ≥ 2`) are `I_m` and the maximal
/// ideal `J`, by quasi-homogeneity. Splitting is faithfully flat, so the
/// embedded primes of `P^e` are exactly the splittings of `J`: one variable
/// from each block. Each is certified by a witness; the count must be
/// `∏ v_i`. With `exhaustive`, every other set of `m` variables is ruled
/// out by `P^e : Q = P^e`.
pub fn verify_thm51<F: Field>(
    field: F,
    m: usize,
    v: &[usize],
    e: u32,
    exhaustive: bool,
    seed: u64,
    budget: &ComputationBudget,
) -> Result<Report> {
    if m < 3 || e < 2 {
        return Err(Error::Domain("needs m ≥ 3 and e ≥ 2".into()));
    }
    let (p, map) = family_thm51(field, m, v)?;
    let ring = p.ring().clone();
    let mut report = Report::new();
    report.set("generators", strings(p.generators()));
    report.run("height(P) = m - 1", || {
        let h = p.height(budget)?;
        Ok((verdict(h == m as i64 - 1), json!(h)))
    });
    let pe = p.power(e)?;
    report.run("groebner basis of P^e", || {
        let gb = pe.groebner(budget)?;
        Ok((CheckStatus::Pass, json!({ "size": gb.len() })))
    });
    let blocks: Vec<Vec<usize>> = map.images().iter().map(Polynomial::support).collect();
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new()];
    for block in &blocks {
        candidates = candidates
            .into_iter()
            .flat_map(|c| {
                block.iter().map(move |&u| {
                    let mut next = c.clone();
                    next.push(u);
                    next
                })
            })
            .collect();
    }
    let expected: usize = v.iter().product();
    report.run("candidate count = prod v_i", || {
        Ok((verdict(candidates.len() == expected), json!(candidates.len())))
    });

    let checks: Vec<Check> = candidates
        .par_iter()
        .map(|cand| {
            Check::run(format!("embedded {}", var_names(&ring, cand)), false, || {
                let q = Ideal::of_variables(&ring, cand);
                let h = q.height(budget)?;
                let cert = find_witness(&pe, &q, seed, budget)?;
                let status = match cert.status {
                    AssStatus::Verified if h == m as i64 => CheckStatus::Pass,
                    AssStatus::WitnessNotFound => CheckStatus::Inconclusive,
                    _ => CheckStatus::Fail,
                };
                let mut data = cert.to_json();
                data["height"] = json!(h);
                Ok((status, data))
            })
        })
        .collect();
    let verified = checks.iter().filter(|c| c.passed()).count();
    for c in checks {
        report.push(c);
    }
    report.set("embedded_count", verified);
    report.set("expected_count", expected);
    report.run("embedded count = prod v_i", || {
        Ok((verdict(verified == expected), json!(verified)))
    });

    if exhaustive {
        let others: Vec<Vec<usize>> = subsets(ring.nvars(), m)
            .into_iter()
            .filter(|s| !candidates.iter().any(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c == *s
            }))
            .collect();
        let checks: Vec<Check> = others
            .par_iter()
            .map(|s| {
                Check::run(format!("not associated {}", var_names(&ring, s)), false, || {
                    let q = Ideal::of_variables(&ring, s);
                    let same = pe.quotient_ideal(&q, budget)?.equals(&pe, budget)?;
                    Ok((verdict(same), json!({ "colon_equals_ideal": same })))
                })
            })
            .collect();
        for c in checks {
            report.push(c);
        }
    }
    Ok(report)
}

/// Leading monomial of `f` in the lex order of `lex`, where `lex` has the
/// same variables as `f`'s ring.
fn lex_lead<F: Field>(f: &Polynomial<F>, lex: &RingRef<F>) -> Result<crate::monomial::Monomial> {
    let g = f.reorder(lex)?;
    g.leading_monomial()
        .cloned()
        .ok_or_else(|| Error::Domain("zero polynomial".into()))
}

/// The extended Rees prime `P_Z` of `J = (a²b²c, b⁴, ab³, a³b, a⁴)`.
///
/// Fast tier: the 21 identity checks over `Q` (`ψ(f_i) = 0`, the product
/// certificates for `aα` and `cβ`, and that `α, β` avoid `c, Z1`), then,
/// over `field`, the Gröbner basis and height of `P_Z`, membership of the
/// named elements, and the lex leading-term argument for `α, β ∉ P_Z²`.
/// The printed form of the `cβ` certificate (with `f18` in place of `f3`)
/// is reported as an optional check.
///
/// Deep tier: `α, β ∉ P_Z²` by membership, and the radicals of
/// `P_Z² : α` and `P_Z² : β`.
pub fn verify_prop33<F: Field>(field: F, deep: bool, budget: &ComputationBudget) -> Result<Report> {
    let mut report = Report::new();
    let qmap = prop33_map(Rationals)?;
    let qring = qmap.source().clone();
    let qel = prop33_elements(&qring)?;
    for (i, f) in qel.f.iter().enumerate() {
        report.run(format!("identity: psi(f{}) = 0", i + 1), || {
            Ok((verdict(qmap.apply(f, budget)?.is_zero()), json!(f.to_string())))
        });
    }
    let f = &qel.f;
    let a = qring.gen("a")?;
    let c = qring.gen("c")?;
    report.run("identity: a*alpha = f1*f2 - f3*f4", || {
        let ok = &a * &qel.alpha == &(&f[0] * &f[1]) - &(&f[2] * &f[3]);
        Ok((verdict(ok), Value::Null))
    });
    let head = &(&f[0] * &f[15]) + &(&f[10] * &f[16]);
    report.run("identity: c*beta = f1*f16 + f11*f17 - f8*f3", || {
        Ok((verdict(&c * &qel.beta == &head - &(&f[7] * &f[2])), Value::Null))
    });
    report.run("identity: alpha, beta free of c and Z1", || {
        let banned = [qring.var_index("c")?, qring.var_index("Z1")?];
        let ok = [&qel.alpha, &qel.beta]
            .iter()
            .all(|p| p.support().iter().all(|i| !banned.contains(i)));
        Ok((verdict(ok), Value::Null))
    });
    report.run_optional("printed: c*beta = f1*f16 + f11*f17 - f8*f18", || {
        let diff = &(&c * &qel.beta) - &(&head - &(&f[7] * &f[17]));
        Ok((verdict(diff.is_zero()), json!({ "residue": diff.to_string() })))
    });
    let (ok, total) = report.tally("identity:");
    report.set("identities_passed", format!("{ok}/{total}"));

    let pz = family_prop33(field, budget);
    let pz = match pz {
        Ok(p) => p,
        Err(e) => {
            report.run("groebner basis of P_Z", || Err(e));
            return Ok(report);
        }
    };
    let prime = &pz.presentation.prime;
    let ring = pz.presentation.ring().clone();
    let el = &pz.elements;
    report.run("groebner basis of P_Z", || {
        let gb = prime.groebner(budget)?;
        Ok((CheckStatus::Pass, json!({ "size": gb.len(), "basis": strings(gb.elements()) })))
    });
    report.run("height(P_Z) = 5", || {
        let h = prime.height(budget)?;
        Ok((verdict(h == 5), json!(h)))
    });
    report.run("f1..f18 in P_Z", || {
        let mut missing = Vec::new();
        for (i, f) in el.f.iter().enumerate() {
            if !prime.contains(f, budget)? {
                missing.push(i + 1);
            }
        }
        Ok((verdict(missing.is_empty()), json!({ "missing": missing })))
    });
    report.run("alpha, beta in P_Z", || {
        let ok = prime.contains(&el.alpha, budget)? && prime.contains(&el.beta, budget)?;
        Ok((verdict(ok), Value::Null))
    });
    report.run("P_Z contains no variable", || {
        Ok((verdict(variable_free(prime, budget)?), Value::Null))
    });
    report.run("lex leading terms of alpha, beta not in LT(P_Z)^2", || {
        let lex = PolyRing::new(ring.vars(), ring.field().clone(), TermOrder::Lex)?;
        let gens = prime
            .generators()
            .iter()
            .map(|g| g.reorder(&lex))
            .collect::<Result<Vec<_>>>()?;
        let gb = buchberger(&lex, &gens, budget)?;
        let lts = MonomialIdeal::new(
            lex.nvars(),
            gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect(),
        );
        let sq = lts.product(&lts);
        let la = lex_lead(&el.alpha, &lex)?;
        let lb = lex_lead(&el.beta, &lex)?;
        let show = |m: &crate::monomial::Monomial| Polynomial::monomial(&lex, lex.field().one(), m.clone()).to_string();
        let expect_a = crate::parse::parse_polynomial(&lex, "a^4*Z2")?;
        let expect_b = crate::parse::parse_polynomial(&lex, "a^5*Z3")?;
        let ok = show(&la) == expect_a.to_string()
            && show(&lb) == expect_b.to_string()
            && !sq.contains(la.exponents())
            && !sq.contains(lb.exponents());
        Ok((
            verdict(ok),
            json!({ "lm_alpha": show(&la), "lm_beta": show(&lb), "lex_basis_size": gb.len() }),
        ))
    });

    if deep {
        let p2 = prime.power(2)?;
        report.run("deep: alpha not in P_Z^2", || {
            Ok((verdict(!p2.contains(&el.alpha, budget)?), Value::Null))
        });
        report.run("deep: beta not in P_Z^2", || {
            Ok((verdict(!p2.contains(&el.beta, budget)?), Value::Null))
        });
        let col_a = p2.quotient(&el.alpha, budget);
        report.run("deep: (a,b,Z1..Z5,T) in sqrt(P_Z^2 : alpha)", || {
            let col = col_a.clone()?;
            let mut missing = Vec::new();
            for name in ["a", "b", "Z1", "Z2", "Z3", "Z4", "Z5", "T"] {
                if !col.radical_contains(&ring.gen(name)?, budget)? {
                    missing.push(name);
                }
            }
            Ok((verdict(missing.is_empty()), json!({ "missing": missing })))
        });
        report.run("deep: c not in sqrt(P_Z^2 : alpha)", || {
            let col = col_a.clone()?;
            Ok((verdict(!col.radical_contains(&ring.gen("c")?, budget)?), Value::Null))
        });
        report.run("deep: maximal ideal in sqrt(P_Z^2 : beta)", || {
            let col = p2.quotient(&el.beta, budget)?;
            let mut missing = Vec::new();
            for (i, name) in ring.vars().iter().enumerate() {
                if !col.radical_contains(&Polynomial::var(&ring, i), budget)? {
                    missing.push(name.clone());
                }
            }
            Ok((verdict(missing.is_empty()), json!({ "missing": missing })))
        });
    }
    Ok(report)
}

/// The spread prime `P_U` for `n` copies of `c`.
///
/// Fast tier: Gröbner basis and height `n + 4` of `P_U`, `Φ(P_U) ⊆ P_Z`,
/// no variables in `P_U`; for `n = 1`, `Φ(P_U) = P_Z` (a renaming).
///
/// Deep tier: the maximal ideal `M_U` is associated to `P_U²` by the graded
/// test; a witness `g ∈ k[a,b,Z2..Z5,T]` for `(a,b,Z1..Z5,T)` over `P_Z²`
/// (from [`find_witness`], falling back to `α`) satisfies `g ∉ P_U²`, every
/// generator of `Q'_U = (a,b,U1..Un,Z2..Z5,T)` lies in `√(P_U² : g)`, and
/// no `c_i` does. Hence a second embedded prime with at least `n + 7`
/// variables exists; its exact size is not determined.
pub fn verify_thm53<F: Field>(field: F, n: usize, deep: bool, seed: u64, budget: &ComputationBudget) -> Result<Report> {
    let mut report = Report::new();
    let th = match family_thm53(field.clone(), n, budget) {
        Ok(t) => t,
        Err(e) => {
            report.run("groebner basis of P_U", || Err(e));
            return Ok(report);
        }
    };
    let pu = &th.presentation.prime;
    let su = th.ring().clone();
    report.set("variables", su.nvars());
    report.run("groebner basis of P_U", || {
        let gb = pu.groebner(budget)?;
        Ok((CheckStatus::Pass, json!({ "size": gb.len() })))
    });
    report.run("height(P_U) = n + 4", || {
        let h = pu.height(budget)?;
        Ok((verdict(h == n as i64 + 4), json!(h)))
    });
    let pz = family_prop33(field, budget)?;
    let pz_prime = &pz.presentation.prime;
    report.run("Phi(P_U) in P_Z", || {
        let img = th.phi.apply_ideal(pu, budget)?;
        Ok((verdict(img.is_subset(pz_prime, budget)?), Value::Null))
    });
    report.run("P_U contains no variable", || {
        Ok((verdict(variable_free(pu, budget)?), Value::Null))
    });
    if n == 1 {
        report.run("n = 1: Phi(P_U) = P_Z", || {
            let img = th.phi.apply_ideal(pu, budget)?;
            Ok((verdict(img.equals(pz_prime, budget)?), Value::Null))
        });
    }

    if deep {
        let pu2 = pu.power(2)?;
        report.run("deep: M_U associated to P_U^2", || {
            Ok((verdict(graded_max_test(&pu2, budget)?), Value::Null))
        });
        let sz = pz.presentation.ring().clone();
        let qz = Ideal::parse(&sz, &["a", "b", "Z1", "Z2", "Z3", "Z4", "Z5", "T"])?;
        let pz2 = pz_prime.power(2)?;
        let mut source = "alpha";
        let mut g = pz.elements.alpha.clone();
        let search = Check::run("deep: witness for Q_Z over P_Z^2", true, || {
            let cert = find_witness(&pz2, &qz, seed, budget)?;
            let status = match cert.status {
                AssStatus::Verified => CheckStatus::Pass,
                AssStatus::WitnessNotFound => CheckStatus::Inconclusive,
                AssStatus::Refuted => CheckStatus::Fail,
            };
            if let Some(w) = cert.witness.as_ref().filter(|_| cert.is_verified()) {
                let banned = [sz.var_index("c")?, sz.var_index("Z1")?];
                if w.support().iter().all(|i| !banned.contains(i)) {
                    g = w.clone();
                    source = "find_witness";
                }
            }
            Ok((status, cert.to_json()))
        });
        report.push(search);
        report.set("witness", g.to_string());
        report.set("witness_source", source);
        let gu = embed_by_name(&g, &su)?;
        report.run("deep: g not in P_U^2", || {
            Ok((verdict(!pu2.contains(&gu, budget)?), json!(gu.to_string())))
        });
        let col = pu2.quotient(&gu, budget);
        report.run("deep: Q'_U in sqrt(P_U^2 : g)", || {
            let col = col.clone()?;
            let mut missing = Vec::new();
            for (i, name) in su.vars().iter().enumerate() {
                if name.starts_with('c') {
                    continue;
                }
                if !col.radical_contains(&Polynomial::var(&su, i), budget)? {
                    missing.push(name.clone());
                }
            }
            Ok((verdict(missing.is_empty()), json!({ "missing": missing })))
        });
        report.run("deep: no c_i in sqrt(P_U^2 : g)", || {
            let col = col.clone()?;
            let mut present = Vec::new();
            for (i, name) in su.vars().iter().enumerate() {
                if name.starts_with('c') && col.radical_contains(&Polynomial::var(&su, i), budget)? {
                    present.push(name.clone());
                }
            }
            Ok((verdict(present.is_empty()), json!({ "present": present })))
        });
        report.set("second_prime_min_variables", n + 7);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn budget() -> ComputationBudget {
        ComputationBudget::default()
    }

    fn xy() -> RingRef<PrimeField> {
        PolyRing::new(&["x", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn certificates() {
        let r = xy();
        let b = budget();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let x = r.gen("x").unwrap();
        assert!(certify_witness(&i, &m, &x, &b).unwrap().is_verified());
        let sq = Ideal::parse(&r, &["x^2"]).unwrap();
        let px = Ideal::parse(&r, &["x"]).unwrap();
        let cert = certify_witness(&sq, &px, &Polynomial::one(&r), &b).unwrap();
        assert_eq!(cert.status, AssStatus::Refuted);
    }

    #[test]
    fn witness_search() {
        let r = xy();
        let b = budget();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let cert = find_witness(&i, &m, 0, &b).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.witness.unwrap().to_string(), "x");
        let px = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(find_witness(&px, &m, 0, &b).unwrap().status, AssStatus::WitnessNotFound);
    }

    #[test]
    fn graded_maximal() {
        let b = budget();
        let r = xy();
        assert!(graded_max_test(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), &b).unwrap());
        assert!(!graded_max_test(&Ideal::parse(&r, &["x"]).unwrap(), &b).unwrap());
        assert!(matches!(
            graded_max_test(&Ideal::parse(&r, &["x - 1"]).unwrap(), &b),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lemma15_small_cases() {
        let b = budget();
        let r = PolyRing::new(&["z"], PrimeField::default(), TermOrder::GrevLex).unwrap();
        let q = Ideal::parse(&r, &["z"]).unwrap();
        let rep = lemma15_components(&q, "z", 2, None, &b).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.components.len(), 2);
        let u1 = Ideal::parse(rep.input.ring(), &["z_1"]).unwrap();
        assert!(rep.components[0].ideal.equals(&u1, &b).unwrap());
        let one = lemma15_components(&q, "z", 1, None, &b).unwrap();
        assert!(one.components[0].ideal.equals(&q, &b).unwrap());
        let bad = Ideal::parse(&r, &["z - 1"]).unwrap();
        assert!(matches!(lemma15_components(&bad, "z", 2, None, &b), Err(Error::Precondition(_))));
    }
}
