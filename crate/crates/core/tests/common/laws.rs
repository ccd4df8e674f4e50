#![allow(dead_code)]

use spreadsplit::ass::{find_witness, graded_max_test, AssStatus};
use spreadsplit::*;

use super::budget;

pub type Outcome = std::result::Result<(), String>;

fn ensure(ok: bool, what: &str) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Containments and equalities among quotients, intersections, products
/// and saturations of `i`, `j`, `k` and `f`.
pub fn ideal_laws(i: &Ideal<PrimeField>, j: &Ideal<PrimeField>, k: &Ideal<PrimeField>, f: &Polynomial<PrimeField>) -> Outcome {
    let b = budget();
    let cap = i.intersect(j, &b).map_err(err)?;
    ensure(cap.is_subset(i, &b).map_err(err)? && cap.is_subset(j, &b).map_err(err)?, "I ∩ J ⊆ I, J")?;
    ensure(i.product(j).map_err(err)?.is_subset(&cap, &b).map_err(err)?, "IJ ⊆ I ∩ J")?;
    ensure(cap.equals(&j.intersect(i, &b).map_err(err)?, &b).map_err(err)?, "I ∩ J = J ∩ I")?;

    let ij = i.quotient_ideal(j, &b).map_err(err)?;
    ensure(i.is_subset(&ij, &b).map_err(err)?, "I ⊆ I : J")?;
    ensure(ij.product(j).map_err(err)?.is_subset(i, &b).map_err(err)?, "(I : J) J ⊆ I")?;
    let ik = i.quotient_ideal(k, &b).map_err(err)?;
    let lhs = i.quotient_ideal(&j.sum(k).map_err(err)?, &b).map_err(err)?;
    ensure(lhs.equals(&ij.intersect(&ik, &b).map_err(err)?, &b).map_err(err)?, "I : (J + K) = (I : J) ∩ (I : K)")?;
    let lhs = cap.quotient_ideal(k, &b).map_err(err)?;
    let jk = j.quotient_ideal(k, &b).map_err(err)?;
    ensure(lhs.equals(&ik.intersect(&jk, &b).map_err(err)?, &b).map_err(err)?, "(I ∩ J) : K = (I : K) ∩ (J : K)")?;
    let lhs = ij.quotient_ideal(k, &b).map_err(err)?;
    let rhs = i.quotient_ideal(&j.product(k).map_err(err)?, &b).map_err(err)?;
    ensure(lhs.equals(&rhs, &b).map_err(err)?, "(I : J) : K = I : JK")?;

    if !f.is_zero() {
        let q = i.quotient(f, &b).map_err(err)?;
        let (sat, _) = i.saturate(f, &b).map_err(err)?;
        ensure(q.is_subset(&sat, &b).map_err(err)?, "I : f ⊆ I : f^∞")?;
        ensure(sat.quotient(f, &b).map_err(err)?.equals(&sat, &b).map_err(err)?, "saturation is stable")?;
        let g = f * f;
        ensure(i.contains(&g, &b).map_err(err)? <= i.radical_contains(f, &b).map_err(err)?, "f² ∈ I ⇒ f ∈ √I")?;
        let with_square = i.sum(&Ideal::new(i.ring(), vec![g]).map_err(err)?).map_err(err)?;
        ensure(with_square.radical_contains(f, &b).map_err(err)?, "f ∈ √(I + (f²))")?;
    }
    Ok(())
}

/// Iterated quotients and the Rabinowitsch trick give the same saturation.
pub fn saturation_agreement(i: &Ideal<PrimeField>, f: &Polynomial<PrimeField>) -> Outcome {
    if f.is_zero() {
        return Ok(());
    }
    let b = budget();
    let (a, _) = i.saturate(f, &b).map_err(err)?;
    let r = i.saturate_rabinowitsch(f, &b).map_err(err)?;
    ensure(a.equals(&r, &b).map_err(err)?, "I : f^∞ by two methods")
}

/// For a monomial ideal, the primes generated by subsets of variables that
/// `find_witness` certifies are exactly the oracle's associated primes, and
/// the graded test agrees on the maximal ideal.
pub fn oracle_agreement(gens: &[Vec<u32>]) -> Outcome {
    let b = budget();
    let n = gens[0].len();
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(&names, PrimeField::default(), TermOrder::GrevLex).map_err(err)?;
    let mono = MonomialIdeal::new(n, gens.to_vec());
    let i = mono.to_ideal(&ring).map_err(err)?;
    let ass = mono.ass_primes();
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let q = Ideal::of_variables(&ring, &vars);
        let cert = find_witness(&i, &q, 0, &b).map_err(err)?;
        let expected = ass.contains(&vars);
        ensure(
            cert.is_verified() == expected,
            &format!("{vars:?}: expected associated = {expected}, got {:?}", cert.status),
        )?;
        if !expected {
            ensure(cert.status == AssStatus::WitnessNotFound, "non-associated prime is never refuted-as-verified")?;
        }
    }
    let full: Vec<usize> = (0..n).collect();
    ensure(
        graded_max_test(&i, &b).map_err(err)? == ass.contains(&full),
        "graded test agrees with the oracle on the maximal ideal",
    )
}

/// Splitting a monomial primary ideal of `k[a, b]` into `n1`, `n2` blocks
/// (all exponents 1) gives `n1^e1 n2^e2` primary components, each with
/// radical `√q + (one variable per split block)`.
pub fn count_law(gens: &[Vec<u32>], n1: usize, n2: usize) -> Outcome {
    let ring = PolyRing::new(&["a", "b"], PrimeField::default(), TermOrder::GrevLex).map_err(err)?;
    let q = MonomialIdeal::new(2, gens.to_vec());
    let pd = q.primary_decomposition();
    ensure(pd.len() <= 1, "input is primary")?;
    let eps: Vec<bool> = (0..2)
        .map(|v| {
            let mut e = vec![0, 0];
            e[v] = 32;
            q.contains(&e)
        })
        .collect();
    let spec = rees::SplittingSpec::new().split("a", n1).split("b", n2);
    let (image, _) = rees::split_ideal(&q.to_ideal(&ring).map_err(err)?, &spec).map_err(err)?;
    let split = MonomialIdeal::from_ideal(&image).map_err(err)?;
    let expected = if eps[0] { n1 } else { 1 } * if eps[1] { n2 } else { 1 };
    let comps = split.primary_decomposition();
    ensure(
        comps.len() == expected,
        &format!("{} components, expected {expected}", comps.len()),
    )?;
    // Radical shape: one variable from each block whose variable is in √q.
    let blocks = [(0..n1).collect::<Vec<_>>(), (n1..n1 + n2).collect::<Vec<_>>()];
    for (support, _) in &comps {
        for (v, block) in blocks.iter().enumerate() {
            let hit = support.iter().filter(|s| block.contains(s)).count();
            ensure(hit == usize::from(eps[v]), "component radical picks one variable per block")?;
        }
    }
    Ok(())
}
