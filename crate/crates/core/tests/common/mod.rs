#![allow(dead_code)]

pub mod laws;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use spreadsplit::*;

pub type Terms = Vec<(i64, Vec<u32>)>;

/// Fixed seed so reruns see the same cases.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_0001),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn budget() -> ComputationBudget {
    ComputationBudget::default()
}

pub fn fp_ring(names: &[&str]) -> RingRef<PrimeField> {
    PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
}

pub fn q_ring(names: &[&str]) -> RingRef<Rationals> {
    PolyRing::new(names, Rationals, TermOrder::GrevLex).unwrap()
}

pub fn xyz() -> RingRef<PrimeField> {
    fp_ring(&["x", "y", "z"])
}

pub fn terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (
            prop_oneof![-3i64..=-1, 1i64..=3],
            prop::collection::vec(0..=max_exp, nvars),
        ),
        1..=max_terms,
    )
}

pub fn monomials(nvars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, nvars), 1..=max_gens)
        .prop_filter("no unit generator", |g| g.iter().all(|e| e.iter().any(|&x| x > 0)))
}

pub fn poly<F: Field>(ring: &RingRef<F>, t: &Terms) -> Polynomial<F> {
    let f = ring.field();
    let terms = t
        .iter()
        .map(|(c, e)| (f.from_i64(*c), Monomial::from_exponents(e).unwrap()))
        .collect();
    Polynomial::from_terms(ring, terms).unwrap()
}

pub fn ideal<F: Field>(ring: &RingRef<F>, gens: &[Terms]) -> Ideal<F> {
    let polys = gens.iter().map(|t| poly(ring, t)).filter(|p| !p.is_zero()).collect();
    Ideal::new(ring, polys).unwrap()
}

pub fn monomial_ideal<F: Field>(ring: &RingRef<F>, gens: &[Vec<u32>]) -> Ideal<F> {
    MonomialIdeal::new(ring.nvars(), gens.to_vec()).to_ideal(ring).unwrap()
}

/// A monomial primary ideal of `k[a, b]` for the given pattern: pure powers
/// of the variables in the pattern plus mixed monomials among them.
pub fn primary_ab(eps: (bool, bool)) -> impl Strategy<Value = Vec<Vec<u32>>> {
    (1u32..=3, 1u32..=3, prop::collection::vec((1u32..=3, 1u32..=3), 0..=2)).prop_map(move |(i, j, mixed)| {
        match eps {
            (true, true) => {
                let mut g = vec![vec![i, 0], vec![0, j]];
                g.extend(mixed.into_iter().map(|(a, b)| vec![a, b]));
                g
            }
            (true, false) => vec![vec![i, 0]],
            (false, true) => vec![vec![0, j]],
            (false, false) => vec![],
        }
    })
}
