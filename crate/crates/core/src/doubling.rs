//! The halving map `d2`, double-cover decompositions and `d2`-fibres.
//!
//! For a semigroup `T`, `d2(T) = { t / 2 : t ∈ T, t even }`. Conversely any
//! `T` can be rebuilt from its halving `H`, its least odd member `n` and the
//! offsets `l_i` of its remaining odd minimal generators `n + 2 l_i`:
//!
//! ```text
//! T = 2H + <n, n + 2 l_1, ..., n + 2 l_s>
//! ```
//!
//! The integer `r` in `g(T) = 2 g(H) + (n - 1) / 2 - r` is recorded alongside.

use crate::error::{Result, SemigroupError};
use crate::exec::Execution;
use crate::semigroup::NumericalSemigroup;

/// Halving map: the semigroup of halves of even members.
pub fn d2(t: &NumericalSemigroup) -> NumericalSemigroup {
    let top = (t.frobenius() + 1).max(0) as usize / 2 + 1;
    let table = (0..=top).map(|h| t.contains_u(2 * h)).collect();
    NumericalSemigroup::from_table(table)
}

/// Least odd member.
pub fn min_odd(t: &NumericalSemigroup) -> u32 {
    (1..).step_by(2).find(|&x| t.contains_u(x)).unwrap() as u32
}

/// Arithmetic data of `T = 2H + <n, n + 2 l_1, ..., n + 2 l_s>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleCoverDecomposition {
    base: NumericalSemigroup,
    n: u32,
    odd_offsets: Vec<u32>,
    r: u32,
}

impl DoubleCoverDecomposition {
    /// `H = d2(T)`.
    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    /// Least odd member of `T`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `[l_1, ..., l_s]`, strictly increasing and positive.
    pub fn odd_offsets(&self) -> &[u32] {
        &self.odd_offsets
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The semigroup this decomposition describes.
    pub fn reassemble(&self) -> NumericalSemigroup {
        reassemble(&self.base, self.n, &self.odd_offsets)
            .expect("decomposition fields are well formed by construction")
    }
}

/// Split `t` into its halving, least odd member and odd generator offsets.
pub fn decompose(t: &NumericalSemigroup) -> DoubleCoverDecomposition {
    let base = d2(t);
    let n = min_odd(t);
    let odd_offsets = t
        .minimal_generators()
        .iter()
        .filter(|&&m| m % 2 == 1 && m != n)
        .map(|&m| (m - n) / 2)
        .collect();
    // Odd gaps above n inject into gaps of the base via x -> (x - n) / 2,
    // which pins r to [0, g(base)].
    let r = 2 * i64::from(base.genus()) + i64::from((n - 1) / 2) - i64::from(t.genus());
    let r = u32::try_from(r).expect("r is non-negative for every numerical semigroup");
    let d = DoubleCoverDecomposition {
        base,
        n,
        odd_offsets,
        r,
    };
    debug_assert_eq!(&d.reassemble(), t);
    d
}

/// The monoid `2H + <n, n + 2 l_1, ..., n + 2 l_s>`.
pub fn reassemble(
    base: &NumericalSemigroup,
    n: u32,
    offsets: &[u32],
) -> Result<NumericalSemigroup> {
    let invalid = |msg: &str| SemigroupError::InvalidDecomposition(msg.to_string());
    if n.is_multiple_of(2) {
        return Err(invalid("n must be odd"));
    }
    if offsets.contains(&0) {
        return Err(invalid("offsets must be positive"));
    }
    let mut gens = Vec::with_capacity(base.embedding_dimension() + offsets.len() + 1);
    for &g in base.minimal_generators() {
        gens.push(
            g.checked_mul(2)
                .ok_or_else(|| invalid("generator overflow"))?,
        );
    }
    gens.push(n);
    for &l in offsets {
        let g = l
            .checked_mul(2)
            .and_then(|x| x.checked_add(n))
            .ok_or_else(|| invalid("generator overflow"))?;
        gens.push(g);
    }
    // 2H contributes an even generator and n is odd, so the gcd is 1.
    NumericalSemigroup::from_generators(&gens)
}

/// Every `T` with `d2(T) = h` and `g(T) <= max_genus`, sorted by genus then gaps.
pub fn preimages(h: &NumericalSemigroup, max_genus: u32) -> Result<Vec<NumericalSemigroup>> {
    preimages_with(h, max_genus, Execution::default())
}

pub fn preimages_with(
    h: &NumericalSemigroup,
    max_genus: u32,
    exec: Execution,
) -> Result<Vec<NumericalSemigroup>> {
    if max_genus < h.genus() {
        return Err(SemigroupError::BoundTooSmall {
            max_genus,
            base_genus: h.genus(),
        });
    }
    // Every gap of T is at most 2 g(T) - 1 <= 2 max_genus - 1, and 2F(h) is a gap.
    if 2 * h.frobenius() > 2 * i64::from(max_genus) - 1 {
        return Ok(Vec::new());
    }
    let search = FibreSearch::new(h, max_genus);
    let frontier = search.frontier(8);
    let mut out = exec.flat_map(frontier, |state| {
        let mut found = Vec::new();
        search.explore(state, &mut found);
        found
    });
    out.sort();
    Ok(out)
}

/// Depth-first choice of the odd gaps in `[1, 2 max_genus - 1]`, pruned so
/// that each leaf is a closed complement with even part exactly `2h`.
struct FibreSearch<'a> {
    base: &'a NumericalSemigroup,
    /// Number of odd integers to decide.
    slots: usize,
    odd_gap_budget: u32,
}

#[derive(Clone)]
struct FibreState {
    members: Vec<bool>,
    odd_members: Vec<usize>,
    odd_gaps: u32,
    next: usize,
}

impl<'a> FibreSearch<'a> {
    fn new(base: &'a NumericalSemigroup, max_genus: u32) -> Self {
        Self {
            base,
            slots: max_genus as usize,
            odd_gap_budget: max_genus - base.genus(),
        }
    }

    fn root(&self) -> FibreState {
        let len = 2 * self.slots + 1;
        let members = (0..len)
            .map(|x| x % 2 == 0 && self.base.contains_u(x / 2))
            .collect();
        FibreState {
            members,
            odd_members: Vec::new(),
            odd_gaps: 0,
            next: 0,
        }
    }

    /// Children of `state` after deciding the next odd integer.
    fn branch(&self, state: &FibreState) -> (Option<FibreState>, Option<FibreState>) {
        let x = 2 * state.next + 1;
        let h = self.base;
        // x may be a gap only if no odd member t < x has x - t in 2H.
        let can_gap = state.odd_gaps < self.odd_gap_budget
            && !state.odd_members.iter().any(|&t| h.contains_u((x - t) / 2));
        // x may be a member only if every odd sum x + t (t = x included) halves into H.
        let can_member =
            h.contains_u(x) && state.odd_members.iter().all(|&t| h.contains_u((x + t) / 2));

        let gap = can_gap.then(|| {
            let mut s = state.clone();
            s.odd_gaps += 1;
            s.next += 1;
            s
        });
        let member = can_member.then(|| {
            let mut s = state.clone();
            s.members[x] = true;
            s.odd_members.push(x);
            s.next += 1;
            s
        });
        (gap, member)
    }

    /// Partial states after at most `depth` decisions, in search order.
    fn frontier(&self, depth: usize) -> Vec<FibreState> {
        let mut layer = vec![self.root()];
        for _ in 0..depth.min(self.slots) {
            layer = layer
                .iter()
                .flat_map(|s| {
                    let (a, b) = self.branch(s);
                    a.into_iter().chain(b)
                })
                .collect();
        }
        layer
    }

    fn explore(&self, state: FibreState, out: &mut Vec<NumericalSemigroup>) {
        if state.next == self.slots {
            out.push(NumericalSemigroup::from_table(state.members));
            return;
        }
        let (gap, member) = self.branch(&state);
        if let Some(s) = gap {
            self.explore(s, out);
        }
        if let Some(s) = member {
            self.explore(s, out);
        }
    }
}
