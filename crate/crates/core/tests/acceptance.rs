//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails.
//!
//! Run with `cargo test -p semigroups --test acceptance -- --nocapture`.

mod common;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use semigroups::{
    classify, d2, decompose, enumerate_genus, enumerate_genus_oracle, filter_by_d2, preimages,
    reassemble, Census, NumericalSemigroup, Provenance, Verdict,
};

type Outcome = Result<String, String>;
/// (generators, n, offsets, r, genus)
type Case = (&'static [u32], u32, &'static [u32], u32, u32);
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn oracle_census_up_to(max_genus: u32) -> Vec<NumericalSemigroup> {
    (0..=max_genus)
        .flat_map(|g| enumerate_genus_oracle(g).unwrap())
        .map(|r| r.semigroup)
        .collect()
}

/// Decompositions of the three semigroups handled case by case.
fn case_identities() -> Outcome {
    let base = ns(&[3, 4, 5]);
    let cases: [Case; 3] = [
        (&[5, 6, 7, 8], 5, &[1], 1, 5),
        (&[3, 7, 8], 3, &[2], 1, 4),
        (&[3, 5], 3, &[1], 1, 4),
    ];
    for (gens, n, offsets, r, genus) in cases {
        let t = ns(gens);
        let d = decompose(&t);
        ensure!(d.base() == &base, "{t}: base {}", d.base());
        ensure!(d.n() == n, "{t}: n = {}", d.n());
        ensure!(
            d.odd_offsets() == offsets,
            "{t}: offsets {:?}",
            d.odd_offsets()
        );
        ensure!(d.r() == r, "{t}: r = {}", d.r());
        ensure!(t.genus() == genus, "{t}: genus {}", t.genus());
        // g(T) = 2 g(H) + (n - 1) / 2 - r
        ensure!(
            genus == 2 * base.genus() + (n - 1) / 2 - r,
            "{t}: genus formula"
        );
        ensure!(
            reassemble(&base, n, offsets).unwrap() == t,
            "{t}: reassembly"
        );
    }
    Ok("three decompositions exact".into())
}

fn theorem_reproduction() -> Outcome {
    for gens in [&[5, 6, 7, 8][..], &[3, 7, 8], &[3, 5]] {
        let v = classify(&ns(gens));
        ensure!(
            v.verdict == Verdict::DoubleCoveringType,
            "{gens:?}: {:?}",
            v.verdict
        );
        ensure!(
            v.provenance == Provenance::Theorem1,
            "{gens:?}: {}",
            v.provenance
        );
    }
    let v = classify(&ns(&[3, 5, 7]));
    ensure!(
        v.verdict == Verdict::NotDoubleCoveringType,
        "<3,5,7>: {:?}",
        v.verdict
    );

    let fibre = preimages(&ns(&[3, 4, 5]), 10).unwrap();
    let verdicts: Vec<_> = fibre.iter().map(|t| (t, classify(t).verdict)).collect();
    let negatives: Vec<_> = verdicts
        .iter()
        .filter(|(_, v)| *v == Verdict::NotDoubleCoveringType)
        .map(|(t, _)| (*t).clone())
        .collect();
    let unknown = verdicts
        .iter()
        .filter(|(_, v)| *v == Verdict::Unknown)
        .count();
    ensure!(negatives == vec![ns(&[3, 5, 7])], "negatives {negatives:?}");
    ensure!(unknown == 0, "{unknown} unknown verdicts");

    let other = preimages(&ns(&[2, 5]), 10).unwrap();
    ensure!(
        other
            .iter()
            .all(|t| classify(t).verdict == Verdict::DoubleCoveringType),
        "fibre over <2,5> has a non-positive verdict"
    );
    Ok(format!(
        "fibre over <3,4,5> to genus 10: {} semigroups, 1 negative, 0 unknown; <2,5>: {} all positive",
        fibre.len(),
        other.len()
    ))
}

fn genus_one_fibre() -> Outcome {
    let mut want = vec![ns(&[3, 4, 5]), ns(&[3, 4]), ns(&[4, 5, 6, 7])];
    for g in 4..=12u32 {
        want.push(ns(&[4, 6, 2 * g - 3]));
        want.push(ns(&[4, 6, 2 * g - 1, 2 * g + 1]));
    }
    want.sort();
    let got = preimages(&ns(&[2, 3]), 12).unwrap();
    let extra: Vec<_> = got.iter().filter(|t| !want.contains(t)).collect();
    let missing: Vec<_> = want.iter().filter(|t| !got.contains(t)).collect();
    ensure!(
        extra.is_empty() && missing.is_empty(),
        "extra {extra:?}, missing {missing:?}"
    );
    ensure!(got == want, "ordering or duplicates differ");
    Ok(format!(
        "{} semigroups, exactly the five families",
        got.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let expected = [1usize, 1, 2, 4, 7, 12, 23, 39, 67];
    for (g, &count) in expected.iter().enumerate() {
        let mut tree: Vec<_> = enumerate_genus(g as u32)
            .unwrap()
            .into_iter()
            .map(|r| r.semigroup)
            .collect();
        tree.sort();
        let oracle: Vec<_> = enumerate_genus_oracle(g as u32)
            .unwrap()
            .into_iter()
            .map(|r| r.semigroup)
            .collect();
        ensure!(tree == oracle, "genus {g}: tree and oracle differ");
        ensure!(tree.len() == count, "genus {g}: {} semigroups", tree.len());
    }
    let oracle: Vec<_> = (0..=8)
        .flat_map(|g| enumerate_genus_oracle(g).unwrap())
        .collect();
    let bases: Vec<_> = oracle
        .iter()
        .filter(|r| r.genus <= 3)
        .map(|r| r.semigroup.clone())
        .collect();
    for h in &bases {
        let got = preimages(h, 8).unwrap();
        let mut want: Vec<_> = filter_by_d2(&oracle, h)
            .into_iter()
            .map(|r| r.semigroup)
            .collect();
        want.sort();
        ensure!(got == want, "fibre over {h} differs from the census filter");
    }
    Ok(format!("counts {expected:?}; {} fibres agree", bases.len()))
}

fn arithmetic_identities() -> Outcome {
    let all = oracle_census_up_to(8);
    let mut checks = 0usize;
    for h in &all {
        for m in (1..=20u32).filter(|&m| h.contains(m as i64)) {
            let ap = h.apery_set(m).unwrap();
            ensure!(ap.len() == m as usize, "{h}: |Ap(H,{m})| = {}", ap.len());
            let mut residues: Vec<_> = ap.iter().map(|w| w % m).collect();
            residues.sort_unstable();
            ensure!(residues == (0..m).collect::<Vec<_>>(), "{h}: Ap residues");
            let sum: u64 = ap.iter().map(|&w| w as u64).sum();
            let m64 = m as u64;
            ensure!(
                2 * h.genus() as u64 * m64 == 2 * sum - m64 * (m64 - 1),
                "{h}: Selmer genus identity at m = {m}"
            );
            ensure!(
                h.frobenius() == *ap.iter().max().unwrap() as i64 - m as i64,
                "{h}: Selmer Frobenius identity at m = {m}"
            );
            checks += 1;
        }
        if h.genus() >= 1 {
            ensure!(h.frobenius() < 2 * h.genus() as i64, "{h}: F > 2g - 1");
        }
        ensure!(
            &NumericalSemigroup::from_gaps(h.gaps()).unwrap() == h,
            "{h}: gap round trip"
        );
        ensure!(
            &NumericalSemigroup::from_generators(h.minimal_generators()).unwrap() == h,
            "{h}: generator round trip"
        );
        ensure!(
            &decompose(h).reassemble() == h,
            "{h}: reassemble(decompose)"
        );
    }

    let mut rng = StdRng::seed_from_u64(0x5e_16_00_01);
    let mut pairs = 0;
    while pairs < 100 {
        let a = rng.random_range(2..=59u32);
        let b = rng.random_range(a + 1..=60u32);
        if gcd(a, b) != 1 {
            continue;
        }
        let h = ns(&[a, b]);
        ensure!(
            h.frobenius() == (a * b - a - b) as i64,
            "F(<{a},{b}>) = {}",
            h.frobenius()
        );
        ensure!(
            h.genus() == (a - 1) * (b - 1) / 2,
            "g(<{a},{b}>) = {}",
            h.genus()
        );
        ensure!(h.gaps() == oracle_gaps(&[a, b]), "gaps of <{a},{b}>");
        pairs += 1;
    }
    Ok(format!(
        "{} semigroups, {checks} Apery checks, {pairs} coprime pairs, 0 violations",
        all.len()
    ))
}

fn r_bounds() -> Outcome {
    let all = oracle_census_up_to(8);
    ensure!(
        all.len() == 156,
        "oracle census has {} semigroups",
        all.len()
    );
    let census = Census::default();
    let tree_total: u64 = (0..=8).map(|g| census.count_genus(g).unwrap()).sum();
    ensure!(tree_total == 156, "tree census has {tree_total} semigroups");
    let mut max_r = 0;
    for t in &all {
        let d = decompose(t);
        let g = d2(t).genus();
        ensure!(d.r() <= g, "{t}: r = {} > g(d2) = {g}", d.r());
        let lhs = t.genus() as i64;
        let rhs = 2 * g as i64 + (d.n() as i64 - 1) / 2 - d.r() as i64;
        ensure!(lhs == rhs, "{t}: r does not satisfy its defining identity");
        max_r = max_r.max(d.r());
    }
    Ok(format!("156 semigroups, 0 <= r <= g(d2), max r = {max_r}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 6] = [
        ("1 case identities", case_identities),
        ("2 classification theorems", theorem_reproduction),
        ("3 genus-one fibre exhaustiveness", genus_one_fibre),
        ("4 oracle equivalence", oracle_equivalence),
        ("5 arithmetic identities", arithmetic_identities),
        ("6 r-parameter bounds", r_bounds),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                println!("FAIL [{name}] {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
