//! Brute-force oracles shared by the integration tests. None of these touch
//! the library's own representation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use semigroups::NumericalSemigroup;

pub fn ns(gens: &[u32]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coin-problem table: `reach[x]` iff `x` is a non-negative combination of `gens`.
pub fn representable_table(gens: &[u32], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for x in 1..=limit {
        reach[x] = gens
            .iter()
            .any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach
}

/// Gaps of `<gens>` by dynamic programming up to the Schur bound
/// `(a_min - 1)(a_max - 1)`, beyond which everything is representable.
pub fn oracle_gaps(gens: &[u32]) -> Vec<u32> {
    let lo = *gens.iter().min().unwrap() as usize;
    let hi = *gens.iter().max().unwrap() as usize;
    let limit = (lo - 1) * (hi - 1) + 1;
    let reach = representable_table(gens, limit);
    (0..=limit)
        .filter(|&x| !reach[x])
        .map(|x| x as u32)
        .collect()
}

/// Halving computed from a gap list.
pub fn oracle_d2_gaps(gaps: &[u32]) -> Vec<u32> {
    gaps.iter()
        .filter(|&&x| x % 2 == 0)
        .map(|x| x / 2)
        .collect()
}

/// Minimal generators from a gap list: members below F + m + 1 that are not
/// sums of two positive members.
pub fn oracle_min_gens(gaps: &[u32]) -> Vec<u32> {
    let gapset: BTreeSet<u32> = gaps.iter().copied().collect();
    let member = |x: u32| !gapset.contains(&x);
    let m = (1..).find(|&x| member(x)).unwrap();
    let f = gaps.last().copied().unwrap_or(0);
    (1..=f + m + 1)
        .filter(|&x| member(x) && !(1..x).any(|y| member(y) && member(x - y)))
        .collect()
}

/// Closure test for a candidate gap list.
pub fn oracle_closed(gaps: &[u32]) -> bool {
    let gapset: BTreeSet<u32> = gaps.iter().copied().collect();
    if gapset.contains(&0) {
        return false;
    }
    gaps.iter()
        .all(|&g| !(1..g).any(|a| !gapset.contains(&a) && !gapset.contains(&(g - a))))
}
