//! Canonical representation of a numerical semigroup and its basic invariants.
//!
//! A semigroup is stored as a dense membership table over `[0, F + 1]`, where
//! `F` is the Frobenius number. Everything above `F` is a member implicitly, so
//! two semigroups are equal exactly when their tables are equal.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, SemigroupError};

/// A cofinite additive submonoid of the non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// `members[i]` iff `i` belongs to the semigroup; length is `F + 2`.
    members: Vec<bool>,
    frobenius: i64,
    genus: u32,
    generators: Vec<u32>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The whole of the non-negative integers: no gaps, Frobenius number −1.
    pub fn full() -> Self {
        Self {
            members: vec![true],
            frobenius: -1,
            genus: 0,
            generators: vec![1],
        }
    }

    /// The monoid generated by `gens`. Duplicates and redundant generators are
    /// accepted; the cached generating set is always the minimal one.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let d = gens.iter().copied().fold(0, gcd);
        if d != 1 {
            return Err(SemigroupError::NotNumerical { gcd: d });
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0] as usize;

        // Sieve until `m` consecutive members appear; past that point every
        // integer is reachable by adding copies of `m`.
        let mut members = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < m {
            x += 1;
            let hit = sorted
                .iter()
                .take_while(|&&g| g as usize <= x)
                .any(|&g| members[x - g as usize]);
            members.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        Ok(Self::from_table(members))
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u32> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(SemigroupError::ZeroGap);
        }
        let top = gaps.last().map_or(0, |&f| f as usize);
        let mut members = vec![true; top + 2];
        for &g in &gaps {
            members[g as usize] = false;
        }
        // Closure only needs checking at gaps: sums landing above F are members.
        for &g in &gaps {
            let g = g as usize;
            if let Some(a) = (1..=g / 2).find(|&a| members[a] && members[g - a]) {
                return Err(SemigroupError::NotClosed {
                    left: a as u32,
                    right: (g - a) as u32,
                    sum: g as u32,
                });
            }
        }
        Ok(Self::from_table(members))
    }

    /// Build from a membership table whose closure the caller has
    /// guaranteed. Trailing members are trimmed and every cached field is
    /// recomputed from the table.
    pub(crate) fn from_table(mut members: Vec<bool>) -> Self {
        debug_assert!(members.first() == Some(&true));
        let last_gap = members.iter().rposition(|&b| !b);
        let frobenius = last_gap.map_or(-1, |f| f as i64);
        members.truncate((frobenius + 2) as usize);
        let genus = members.iter().filter(|&&b| !b).count() as u32;
        let generators = minimal_generators_of(&members, frobenius);
        Self {
            members,
            frobenius,
            genus,
            generators,
        }
    }

    /// Membership test; negative values are never members.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.members[x as usize]
        }
    }

    pub(crate) fn contains_u(&self, x: usize) -> bool {
        x >= self.members.len() || self.members[x]
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.gap_iter().collect()
    }

    pub fn gap_iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i as u32)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Largest gap, or −1 for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least positive member (1 for the full monoid).
    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    /// The unique minimal generating set, ascending.
    pub fn minimal_generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn is_full(&self) -> bool {
        self.genus == 0
    }

    /// Apéry set with respect to a member `m`: entry `i` is the least member
    /// congruent to `i` modulo `m`.
    pub fn apery_set(&self, m: u32) -> Result<Vec<u32>> {
        if m == 0 || !self.contains(m as i64) {
            return Err(SemigroupError::NotMember(m));
        }
        let m = m as usize;
        let mut apery = vec![u32::MAX; m];
        let mut remaining = m;
        let mut x = 0usize;
        while remaining > 0 {
            if self.contains_u(x) && apery[x % m] == u32::MAX {
                apery[x % m] = x as u32;
                remaining -= 1;
            }
            x += 1;
        }
        Ok(apery)
    }

    /// Ordering key used for every sorted listing in the crate.
    fn ordering_key(&self) -> (u32, impl Iterator<Item = u32> + '_) {
        (self.genus, self.gap_iter())
    }
}

fn minimal_generators_of(members: &[bool], frobenius: i64) -> Vec<u32> {
    let member = |x: usize| x >= members.len() || members[x];
    let m = (1..).find(|&x| member(x)).unwrap();
    // Every minimal generator lies in the Apéry set of m, so it is at most F + m.
    let top = (frobenius + m as i64).max(m as i64) as usize;
    (m..=top)
        .filter(|&x| member(x) && !(m..=x / 2).any(|y| member(y) && member(x - y)))
        .map(|x| x as u32)
        .collect()
}

impl Ord for NumericalSemigroup {
    /// Genus first, then the ascending gap list lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        let (ga, a) = self.ordering_key();
        let (gb, b) = other.ordering_key();
        ga.cmp(&gb).then_with(|| a.cmp(b))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
