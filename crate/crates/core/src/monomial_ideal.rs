//! Monomial ideals on bare exponent vectors.
//!
//! Nothing here touches the Gröbner engine, which makes this module the
//! reference oracle for decompositions, associated primes, intersections
//! and radicals of monomial ideals.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;

type Exps = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// A monomial ideal kept as its minimal generating set, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Exps>,
}

/// An irreducible monomial ideal `(x_i^{a_i} : i in support)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Irreducible {
    pub powers: Vec<(usize, u32)>,
}

impl Irreducible {
    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().map(|p| p.0).collect()
    }

    /// `self ⊇ other`: every pure power of `other` is a multiple of one here.
    fn contains(&self, other: &Irreducible) -> bool {
        other.powers.iter().all(|&(v, b)| {
            self.powers
                .iter()
                .any(|&(w, a)| w == v && a <= b)
        })
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            nvars,
            self.powers
                .iter()
                .map(|&(v, a)| {
                    let mut e = vec![0; nvars];
                    e[v] = a;
                    e
                })
                .collect(),
        )
    }
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Exps>) -> Self {
        let mut gens: Vec<Exps> = gens.into_iter().filter(|g| g.len() == nvars).collect();
        gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
        gens.dedup();
        let mut minimal: Vec<Exps> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| divides(m, &g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn from_ideal<F: Field>(ideal: &Ideal<F>) -> Result<Self> {
        let n = ideal.ring().nvars();
        let mut gens = Vec::new();
        for g in ideal.generators() {
            if g.is_zero() {
                continue;
            }
            if !g.is_monomial() {
                return Err(Error::Unsupported(format!("`{g}` is not a monomial")));
            }
            gens.push(g.terms()[0].mono.exponents().to_vec());
        }
        Ok(Self::new(n, gens))
    }

    pub fn to_ideal<F: Field>(&self, ring: &RingRef<F>) -> Result<Ideal<F>> {
        if ring.nvars() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let gens = self
            .gens
            .iter()
            .map(|e| {
                Ok(Polynomial::monomial(
                    ring,
                    ring.field().one(),
                    Monomial::from_exponents(e)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Exps] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::new(self.nvars, gens)
    }

    /// Pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(lcm(a, b));
            }
        }
        Self::new(self.nvars, gens)
    }

    pub fn quotient(&self, m: &[u32]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        Self::new(self.nvars, gens)
    }

    /// Square-free parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().map(|&e| u32::from(e > 0)).collect())
            .collect();
        Self::new(self.nvars, gens)
    }

    /// Irredundant irreducible decomposition, by splitting a generator
    /// `x^a * m'` as `(I + x^a) ∩ (I + m')` until all generators are pure
    /// powers.
    pub fn irreducible_components(&self) -> Vec<Irreducible> {
        let mut found: BTreeSet<Irreducible> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(ideal) = stack.pop() {
            if ideal.is_unit() {
                continue;
            }
            let mixed = ideal
                .gens
                .iter()
                .find(|g| g.iter().filter(|&&e| e > 0).count() > 1);
            match mixed {
                None => {
                    let mut powers: Vec<(usize, u32)> = ideal
                        .gens
                        .iter()
                        .map(|g| {
                            let v = g.iter().position(|&e| e > 0).expect("not a unit");
                            (v, g[v])
                        })
                        .collect();
                    powers.sort_unstable();
                    found.insert(Irreducible { powers });
                }
                Some(g) => {
                    let v = g.iter().position(|&e| e > 0).expect("mixed");
                    let mut pure = vec![0; self.nvars];
                    pure[v] = g[v];
                    let mut rest = g.clone();
                    rest[v] = 0;
                    let mut a = ideal.gens.clone();
                    a.push(pure);
                    let mut b = ideal.gens.clone();
                    b.push(rest);
                    stack.push(Self::new(self.nvars, a));
                    stack.push(Self::new(self.nvars, b));
                }
            }
        }
        let all: Vec<Irreducible> = found.into_iter().collect();
        all.iter()
            .filter(|c| !all.iter().any(|d| d != *c && c.contains(d)))
            .cloned()
            .collect()
    }

    /// Irredundant primary decomposition: irreducible components grouped by
    /// radical. Pairs of (prime support, primary component).
    pub fn primary_decomposition(&self) -> Vec<(Vec<usize>, MonomialIdeal)> {
        let mut groups: Vec<(Vec<usize>, MonomialIdeal)> = Vec::new();
        for c in self.irreducible_components() {
            let supp = c.support();
            let ideal = c.to_ideal(self.nvars);
            match groups.iter_mut().find(|(s, _)| *s == supp) {
                Some((_, acc)) => *acc = acc.intersect(&ideal),
                None => groups.push((supp, ideal)),
            }
        }
        groups.sort();
        groups
    }

    /// Associated primes as sorted sets of variable indices.
    pub fn ass_primes(&self) -> Vec<Vec<usize>> {
        self.primary_decomposition().into_iter().map(|(s, _)| s).collect()
    }

    /// Associated primes strictly containing another associated prime.
    pub fn embedded_primes(&self) -> Vec<Vec<usize>> {
        let ass = self.ass_primes();
        ass.iter()
            .filter(|p| ass.iter().any(|q| q != *p && q.iter().all(|v| p.contains(v))))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect())
    }

    #[test]
    fn minimal_generators() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[3, 0], &[1, 2]]);
        assert_eq!(i.generators(), &[vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn ass_of_small_ideals() {
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).ass_primes(), vec![vec![0], vec![0, 1]]);
        assert_eq!(mi(2, &[&[1, 0], &[0, 1]]).ass_primes(), vec![vec![0, 1]]);
        assert_eq!(mi(2, &[&[1, 1]]).ass_primes(), vec![vec![0], vec![1]]);
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).embedded_primes(), vec![vec![0, 1]]);
    }

    #[test]
    fn decomposition_intersects_back() {
        let i = mi(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3], &[1, 1, 1]]);
        let i = i.sum(&mi(3, &[&[0, 1, 1]]));
        let mut acc: Option<MonomialIdeal> = None;
        for (_, q) in i.primary_decomposition() {
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        assert_eq!(acc.unwrap(), i);
    }

    #[test]
    fn split_primary_has_one_component_per_block_variable() {
        // (a, b^2, u1 u2 u3) in k[a, b, u1, u2, u3]
        let i = mi(5, &[&[1, 0, 0, 0, 0], &[0, 2, 0, 0, 0], &[0, 0, 1, 1, 1]]);
        let pd = i.primary_decomposition();
        assert_eq!(pd.len(), 3);
        assert_eq!(pd[0].0, vec![0, 1, 2]);
        assert_eq!(pd[0].1, mi(5, &[&[1, 0, 0, 0, 0], &[0, 2, 0, 0, 0], &[0, 0, 1, 0, 0]]));
    }

    #[test]
    fn zero_and_unit_ideals() {
        assert_eq!(mi(2, &[]).ass_primes(), vec![Vec::<usize>::new()]);
        assert!(mi(2, &[&[0, 0]]).ass_primes().is_empty());
    }
}
