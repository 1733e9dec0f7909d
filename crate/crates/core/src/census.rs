//! Enumeration of all numerical semigroups of a given genus.
//!
//! The main walk is the semigroup tree: the root is the full monoid, and the
//! children of `S` are `S \ {a}` for each minimal generator `a > F(S)`, taken
//! in increasing `a`. Every semigroup of genus `g` sits at depth `g` with a
//! unique parent (re-add its Frobenius number), so a depth-first walk visits
//! each one exactly once.
//!
//! Tree nodes are packed into a `u128` membership mask. Minimal generators of
//! a genus-`g` semigroup are at most `3g`, so masks cover every genus up to
//! [`MAX_TREE_GENUS`].

use itertools::Itertools;

use crate::doubling::d2;
use crate::error::{Result, SemigroupError};
use crate::exec::Execution;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_CEILING: u32 = 25;
/// Hard limit imposed by the 128-bit node encoding.
pub const MAX_TREE_GENUS: u32 = 40;
/// Largest genus the brute-force oracle accepts.
pub const ORACLE_MAX_GENUS: u32 = 8;

/// Environment variable overriding [`DEFAULT_GENUS_CEILING`].
pub const CEILING_ENV: &str = "SEMIGROUP_GENUS_CEILING";

/// One row of a census: a semigroup with its invariants recomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CensusRecord {
    pub semigroup: NumericalSemigroup,
    pub genus: u32,
    pub frobenius: i64,
    pub multiplicity: u32,
    pub minimal_generators: Vec<u32>,
}

impl From<NumericalSemigroup> for CensusRecord {
    fn from(semigroup: NumericalSemigroup) -> Self {
        Self {
            genus: semigroup.genus(),
            frobenius: semigroup.frobenius(),
            multiplicity: semigroup.multiplicity(),
            minimal_generators: semigroup.minimal_generators().to_vec(),
            semigroup,
        }
    }
}

/// Tree walker with a genus ceiling and an execution mode.
#[derive(Debug, Clone, Copy)]
pub struct Census {
    ceiling: u32,
    exec: Execution,
}

impl Default for Census {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_GENUS_CEILING,
            exec: Execution::default(),
        }
    }
}

impl Census {
    pub fn new(ceiling: u32, exec: Execution) -> Self {
        Self { ceiling, exec }
    }

    /// Default settings, with the ceiling taken from `SEMIGROUP_GENUS_CEILING`
    /// when it is set to an integer.
    pub fn from_env() -> Self {
        let ceiling = std::env::var(CEILING_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_GENUS_CEILING);
        Self {
            ceiling,
            ..Self::default()
        }
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling.min(MAX_TREE_GENUS)
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    fn check(&self, genus: u32) -> Result<()> {
        if genus > self.ceiling() {
            return Err(SemigroupError::LimitExceeded {
                requested: genus,
                ceiling: self.ceiling(),
            });
        }
        Ok(())
    }

    /// All semigroups of genus exactly `genus`, in depth-first tree order.
    pub fn enumerate_genus(&self, genus: u32) -> Result<Vec<CensusRecord>> {
        self.check(genus)?;
        let frontier = frontier(genus);
        Ok(self.exec.flat_map(frontier, |node| {
            let mut out = Vec::new();
            walk(node, genus, &mut |leaf| out.push(leaf.to_record()));
            out
        }))
    }

    /// Number of semigroups of genus `genus`, without materializing them.
    pub fn count_genus(&self, genus: u32) -> Result<u64> {
        self.check(genus)?;
        Ok(self.exec.sum(frontier(genus), |node| {
            let mut n = 0u64;
            walk(node, genus, &mut |_| n += 1);
            n
        }))
    }

    /// Stream every semigroup of genus `genus` to `visit`, in tree order.
    pub fn for_each_genus<F: FnMut(NumericalSemigroup)>(
        &self,
        genus: u32,
        mut visit: F,
    ) -> Result<()> {
        self.check(genus)?;
        walk(Node::root(), genus, &mut |leaf| visit(leaf.to_semigroup()));
        Ok(())
    }

    /// Concatenated censuses for genus `0..=max_genus`.
    pub fn enumerate_up_to(&self, max_genus: u32) -> Result<Vec<CensusRecord>> {
        self.check(max_genus)?;
        let mut all = Vec::new();
        for g in 0..=max_genus {
            all.extend(self.enumerate_genus(g)?);
        }
        Ok(all)
    }
}

/// All semigroups of genus `genus` with the default census settings.
pub fn enumerate_genus(genus: u32) -> Result<Vec<CensusRecord>> {
    Census::default().enumerate_genus(genus)
}

/// Brute-force census: every `genus`-subset of `[1, 2 genus - 1]` whose
/// complement is closed under addition. Sorted by gap list.
pub fn enumerate_genus_oracle(genus: u32) -> Result<Vec<CensusRecord>> {
    if genus > ORACLE_MAX_GENUS {
        return Err(SemigroupError::LimitExceeded {
            requested: genus,
            ceiling: ORACLE_MAX_GENUS,
        });
    }
    let window = (1..2 * genus).collect::<Vec<_>>();
    let mut records: Vec<CensusRecord> = window
        .into_iter()
        .combinations(genus as usize)
        .filter_map(|gaps| NumericalSemigroup::from_gaps(gaps).ok())
        .map(CensusRecord::from)
        .collect();
    records.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
    Ok(records)
}

/// Records whose halving equals `h`.
pub fn filter_by_d2(records: &[CensusRecord], h: &NumericalSemigroup) -> Vec<CensusRecord> {
    records
        .iter()
        .filter(|r| &d2(&r.semigroup) == h)
        .cloned()
        .collect()
}

#[derive(Clone, Copy)]
struct Node {
    /// Bit `i` set iff `i` is a member; bits above `frobenius` are all set.
    members: u128,
    frobenius: i32,
    genus: u32,
    multiplicity: u32,
}

impl Node {
    fn root() -> Self {
        Self {
            members: u128::MAX,
            frobenius: -1,
            genus: 0,
            multiplicity: 1,
        }
    }

    fn is_member(&self, x: u32) -> bool {
        self.members >> x & 1 == 1
    }

    /// Whether member `a` splits as a sum of two positive members.
    fn decomposable(&self, a: u32) -> bool {
        let positive = self.members & !1;
        // Bit x of `mirror` is bit (a - x) of `positive`, for 0 <= x <= a.
        let mirror = positive.reverse_bits() >> (127 - a);
        let below_a = (1u128 << a) - 1;
        positive & mirror & below_a != 0
    }

    /// Children in increasing order of the removed generator.
    fn children(&self) -> impl Iterator<Item = Node> + '_ {
        // Minimal generators above F lie in (F, F + m]; the root's is 1.
        let lo = (self.frobenius + 1).max(1) as u32;
        let hi = (self.frobenius + self.multiplicity as i32).max(1) as u32;
        (lo..=hi)
            .filter(|&a| !self.decomposable(a))
            .map(move |a| Node {
                members: self.members & !(1u128 << a),
                frobenius: a as i32,
                genus: self.genus + 1,
                multiplicity: if a == self.multiplicity {
                    self.multiplicity + 1
                } else {
                    self.multiplicity
                },
            })
    }

    fn to_semigroup(self) -> NumericalSemigroup {
        let len = (self.frobenius + 2) as usize;
        NumericalSemigroup::from_table((0..len).map(|x| self.is_member(x as u32)).collect())
    }

    fn to_record(self) -> CensusRecord {
        self.to_semigroup().into()
    }
}

fn walk<F: FnMut(Node)>(node: Node, target: u32, visit: &mut F) {
    if node.genus == target {
        visit(node);
        return;
    }
    for child in node.children() {
        walk(child, target, visit);
    }
}

/// Tree nodes a few levels below the root, in depth-first order, used as
/// independent work units.
fn frontier(target: u32) -> Vec<Node> {
    // The tree is heavily skewed, so split a fixed distance above the leaves.
    let depth = target.saturating_sub(8).max(target.min(4));
    let mut layer = vec![Node::root()];
    for _ in 0..depth {
        layer = layer.iter().flat_map(|n| n.children()).collect();
    }
    layer
}
