mod common;

use common::laws::*;
use common::*;
use proptest::prelude::*;
use spreadsplit::ass::*;
use spreadsplit::*;

fn pattern() -> impl Strategy<Value = (bool, bool)> {
    (any::<bool>(), any::<bool>())
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn witnesses_agree_with_monomial_oracle(gens in monomials(3, 3, 4)) {
        if let Err(e) = oracle_agreement(&gens) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn split_primary_component_count(
        (gens, _) in pattern().prop_flat_map(|e| (primary_ab(e), Just(e))),
        n1 in 1usize..=3,
        n2 in 1usize..=3,
    ) {
        if let Err(e) = count_law(&gens, n1, n2) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn lemma15_decomposes_split_primaries(
        i in 1u32..=2,
        j in 1u32..=3,
        k in 1u32..=3,
        mixed in prop::collection::vec(prop::collection::vec(0u32..=2, 3).prop_filter("proper", |e| e.iter().any(|&x| x > 0)), 0..=2),
        n in 1usize..=3,
    ) {
        let b = budget();
        let r = fp_ring(&["a", "b", "z"]);
        let mut g = vec![vec![i, 0, 0], vec![0, j, 0], vec![0, 0, k]];
        g.extend(mixed);
        let q = monomial_ideal(&r, &g);
        let base = parse_polynomials(&r, &["a", "b"]).unwrap();
        let rep = lemma15_components(&q, "z", n, Some(&base), &b).unwrap();
        prop_assert!(rep.verified());
        prop_assert_eq!(rep.components.len(), n);
        // Same components as the oracle's decomposition of φ(q).
        let oracle = MonomialIdeal::from_ideal(&rep.input).unwrap().primary_decomposition();
        prop_assert_eq!(oracle.len(), n);
        for c in &rep.components {
            let m = MonomialIdeal::from_ideal(&c.ideal.canonical(&b).unwrap()).unwrap();
            prop_assert!(oracle.iter().any(|(_, o)| *o == m));
        }
    }
}

#[test]
fn certificates_replay_from_scratch() {
    let b = budget();
    let (p, _) = rees::family_thm51(PrimeField::default(), 3, &[2, 1, 1]).unwrap();
    let p2 = p.power(2).unwrap();
    let q = Ideal::parse(p.ring(), &["x_1", "y", "z"]).unwrap();
    let cert = find_witness(&p2, &q, 0, &b).unwrap();
    assert!(cert.is_verified());
    // Rebuild everything from printed text and check again.
    let ring = PolyRing::new(&["x_1", "x_2", "y", "z"], PrimeField::default(), TermOrder::GrevLex).unwrap();
    let gens: Vec<String> = p2.generators().iter().map(ToString::to_string).collect();
    let i = Ideal::parse(&ring, &gens).unwrap();
    let w = parse_polynomial(&ring, &cert.witness.unwrap().to_string()).unwrap();
    let q = Ideal::parse(&ring, &["x_1", "y", "z"]).unwrap();
    assert!(!i.contains(&w, &b).unwrap());
    assert!(i.quotient(&w, &b).unwrap().equals(&q, &b).unwrap());
}

#[test]
fn non_associated_primes_are_never_verified() {
    let b = budget();
    let r = xyz();
    let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
    for q in [vec!["y"], vec!["y", "z"], vec!["x", "z"], vec!["x", "y", "z"]] {
        let q = Ideal::parse(&r, &q).unwrap();
        assert_ne!(find_witness(&i, &q, 7, &b).unwrap().status, AssStatus::Verified);
    }
}

#[test]
fn graded_test_on_toric_powers() {
    let b = budget();
    let i = rees::family_toric345(PrimeField::default(), &b).unwrap();
    assert!(!graded_max_test(&i, &b).unwrap());
    assert!(graded_max_test(&i.power(2).unwrap(), &b).unwrap());
}
