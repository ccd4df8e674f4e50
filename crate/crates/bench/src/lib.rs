//! Fixtures shared by the benchmarks.

use spreadsplit::rees::{family_im, family_thm51};
use spreadsplit::{ComputationBudget, Ideal, PolyRing, PrimeField, RingMap, TermOrder};

pub fn field() -> PrimeField {
    PrimeField::default()
}

pub fn budget() -> ComputationBudget {
    ComputationBudget::default()
}

/// `x, y, z -> t^3, t^4, t^5`.
pub fn toric_map() -> RingMap<PrimeField> {
    let src = PolyRing::new(&["x", "y", "z"], field(), TermOrder::GrevLex).unwrap();
    let tgt = PolyRing::new(&["t"], field(), TermOrder::GrevLex).unwrap();
    let t = tgt.gen("t").unwrap();
    let images = vec![t.pow(3), t.pow(4), t.pow(5)];
    RingMap::new(&src, &tgt, images, vec![]).unwrap()
}

/// `I_m` with `m - 3` copies of `z`.
pub fn im(m: usize) -> Ideal<PrimeField> {
    family_im(field(), m).unwrap()
}

/// The split prime `P` of the block-size family, squared.
pub fn thm51_square(m: usize, v: &[usize]) -> Ideal<PrimeField> {
    family_thm51(field(), m, v).unwrap().0.power(2).unwrap()
}

/// The same generators without any cached Gröbner basis.
pub fn fresh(i: &Ideal<PrimeField>) -> Ideal<PrimeField> {
    Ideal::new(i.ring(), i.generators().to_vec()).unwrap()
}
