mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use spreadsplit::rees::{PROP33_ALPHA, PROP33_BETA, PROP33_F, PROP33_J, TORIC345};
use spreadsplit::*;

fn orders() -> Vec<TermOrder> {
    vec![
        TermOrder::Lex,
        TermOrder::GrevLex,
        TermOrder::elimination(1, TermOrder::GrevLex),
        TermOrder::elimination(2, TermOrder::Lex),
    ]
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e).unwrap()
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn term_orders_are_monomial_orders(
        a in prop::collection::vec(0u32..5, 4),
        b in prop::collection::vec(0u32..5, 4),
        c in prop::collection::vec(0u32..5, 4),
    ) {
        let (a, b, c) = (mono(&a), mono(&b), mono(&c));
        let one = Monomial::one(4);
        for o in orders() {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
            if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn polynomial_ring_axioms(f in terms(3, 3, 4), g in terms(3, 3, 4), h in terms(3, 3, 4)) {
        let r = q_ring(&["x", "y", "z"]);
        let (f, g, h) = (poly(&r, &f), poly(&r, &g), poly(&r, &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(f.pow(3), &(&f * &f) * &f);
        prop_assert!((&f - &f).is_zero());
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), Some(f.clone()));
        }
    }

    #[test]
    fn terms_stay_sorted_and_nonzero(f in terms(3, 4, 6), g in terms(3, 4, 6)) {
        let r = xyz();
        let p = &poly(&r, &f) * &poly(&r, &g);
        for w in p.terms().windows(2) {
            prop_assert_eq!(r.order().cmp(&w[0].mono, &w[1].mono), Ordering::Greater);
        }
        prop_assert!(p.terms().iter().all(|t| !r.field().is_zero(&t.coeff)));
    }

    #[test]
    fn print_parse_round_trip(f in terms(3, 4, 5)) {
        let q = q_ring(&["x", "y", "z"]);
        let p = poly(&q, &f);
        prop_assert_eq!(parse_polynomial(&q, &p.to_string()).unwrap(), p);
        let r = xyz();
        let p = poly(&r, &f);
        prop_assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
    }

    // The reduced basis over Q, read mod p, is the reduced basis over F_p
    // whenever no denominator or leading coefficient vanishes mod p.
    #[test]
    fn prime_field_agrees_with_rationals(gens in prop::collection::vec(terms(3, 2, 3), 1..=3)) {
        let b = budget();
        let q = q_ring(&["x", "y", "z"]);
        let r = xyz();
        let gq = buchberger(&q, &gens.iter().map(|t| poly(&q, t)).collect::<Vec<_>>(), &b).unwrap();
        let gp = buchberger(&r, &gens.iter().map(|t| poly(&r, t)).collect::<Vec<_>>(), &b).unwrap();
        let mut reduced = Vec::new();
        for g in gq.elements() {
            let mut t = Vec::new();
            for term in g.terms() {
                match r.field().from_rational(&term.coeff) {
                    Some(c) => t.push((c, term.mono.clone())),
                    None => return Ok(()),
                }
            }
            reduced.push(Polynomial::from_terms(&r, t).unwrap());
        }
        prop_assume!(reduced.iter().zip(gq.elements()).all(|(a, b)| a.len() == b.len()));
        prop_assert_eq!(reduced.as_slice(), gp.elements());
    }
}

#[test]
fn corpus_round_trips() {
    let q = q_ring(&["a", "b", "c", "Z1", "Z2", "Z3", "Z4", "Z5", "T"]);
    let r = fp_ring(&["a", "b", "c", "Z1", "Z2", "Z3", "Z4", "Z5", "T"]);
    let corpus = PROP33_F
        .iter()
        .chain(PROP33_J.iter())
        .chain([PROP33_ALPHA, PROP33_BETA].iter());
    for s in corpus {
        let p = parse_polynomial(&q, s).unwrap();
        assert_eq!(parse_polynomial(&q, &p.to_string()).unwrap(), p, "{s}");
        let p = parse_polynomial(&r, s).unwrap();
        assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p, "{s}");
    }
    let xyz = q_ring(&["x", "y", "z"]);
    for s in TORIC345 {
        let p = parse_polynomial(&xyz, s).unwrap();
        assert_eq!(parse_polynomial(&xyz, &p.to_string()).unwrap(), p);
    }
}

#[test]
fn family_generators_round_trip() {
    let b = budget();
    let mut ideals = vec![rees::family_toric345(PrimeField::default(), &b).unwrap()];
    for m in 3..=5 {
        ideals.push(rees::family_im(PrimeField::default(), m).unwrap());
    }
    for v in [vec![2, 1, 1], vec![2, 2, 1], vec![1, 1, 1, 2]] {
        ideals.push(rees::family_thm51(PrimeField::default(), v.len(), &v).unwrap().0);
    }
    ideals.push(rees::family_prop33(PrimeField::default(), &b).unwrap().presentation.prime);
    ideals.push(rees::family_thm53(PrimeField::default(), 2, &b).unwrap().presentation.prime);
    for i in &ideals {
        for g in i.generators() {
            assert_eq!(&parse_polynomial(i.ring(), &g.to_string()).unwrap(), g);
        }
    }
}
