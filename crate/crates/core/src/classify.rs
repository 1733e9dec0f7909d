//! Decide whether a semigroup is of double covering type, i.e. the
//! Weierstrass semigroup of a ramification point on a double cover of curves.
//!
//! The decision only uses settled results, all of which depend on the genus
//! of the halving `d2(T)`. Anything past genus 2 is reported as unknown.

use std::fmt;

use crate::doubling::{d2, decompose, DoubleCoverDecomposition};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    DoubleCoveringType,
    NotDoubleCoveringType,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DoubleCoveringType => "DoubleCoveringType",
            Verdict::NotDoubleCoveringType => "NotDoubleCoveringType",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The result that justifies a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `g(T) < 2 g(d2(T))` rules out any double cover.
    GenusBound,
    /// `d2(T)` is the full monoid, so `T = <2, 2g + 1>`.
    HyperellipticFamily,
    /// `T` is the full monoid itself: the `<2, 2g + 1>` formula at `g = 0`.
    DegenerateFullMonoid,
    /// `d2(T) = <2,3>` and `T` is one of the five listed families.
    EllipticBase,
    /// `d2(T) = <2,5>`: every such `T` is of double covering type.
    BaseTwoFive,
    /// `<5,6,7,8>`, `<3,7,8>` and `<3,5>`.
    Theorem1,
    /// `d2(T) = <3,4,5>` and `T` is not `<3,5,7>`.
    Theorem2,
    /// `<3,5,7>`, the one exception over `<3,4,5>`.
    Theorem2Exception,
    /// `g(d2(T)) >= 3`.
    BeyondKnownResults,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::GenusBound => "necessary condition g(T) >= 2 g(d2(T)) fails",
            Provenance::HyperellipticFamily => "family <2,2g+1> over the full monoid",
            Provenance::DegenerateFullMonoid => {
                "family <2,2g+1> over the full monoid (degenerate: g = 0)"
            }
            Provenance::EllipticBase => "classification of the fibre over <2,3>",
            Provenance::BaseTwoFive => "result for d2(T) = <2,5>",
            Provenance::Theorem1 => "Theorem 1",
            Provenance::Theorem2 => "Theorem 2",
            Provenance::Theorem2Exception => "Theorem 2 exception <3,5,7>",
            Provenance::BeyondKnownResults => "beyond known results: g(d2(T)) >= 3",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict plus its justification. A witness decomposition is attached
/// exactly when the verdict is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub verdict: Verdict,
    pub provenance: Provenance,
    pub witness: Option<DoubleCoverDecomposition>,
}

fn gens(g: &[u32]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(g).expect("literal generators are coprime")
}

/// `<2, 2g + 1>`, the only semigroup of genus `g` over the full monoid.
pub fn hyperelliptic(genus: u32) -> NumericalSemigroup {
    gens(&[2, 2 * genus + 1])
}

/// Members of the five families over `<2,3>` that have genus `genus`.
pub fn elliptic_fibre_families(genus: u32) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    match genus {
        2 => out.push(gens(&[3, 4, 5])),
        3 => {
            out.push(gens(&[3, 4]));
            out.push(gens(&[4, 5, 6, 7]));
        }
        _ => {}
    }
    if genus >= 4 {
        out.push(gens(&[4, 6, 2 * genus - 3]));
        out.push(gens(&[4, 6, 2 * genus - 1, 2 * genus + 1]));
    }
    out
}

pub fn classify(t: &NumericalSemigroup) -> ClassificationVerdict {
    let base = d2(t);
    let g = base.genus();
    let gt = t.genus();

    let positive = |provenance| ClassificationVerdict {
        verdict: Verdict::DoubleCoveringType,
        provenance,
        witness: Some(decompose(t)),
    };
    let negative = |provenance| ClassificationVerdict {
        verdict: Verdict::NotDoubleCoveringType,
        provenance,
        witness: None,
    };

    if gt < 2 * g {
        return negative(Provenance::GenusBound);
    }
    if g == 0 {
        assert_eq!(
            t,
            &hyperelliptic(gt),
            "fibre over the full monoid must be <2,2g+1>"
        );
        return positive(if gt == 0 {
            Provenance::DegenerateFullMonoid
        } else {
            Provenance::HyperellipticFamily
        });
    }
    if base == gens(&[2, 3]) {
        assert!(
            elliptic_fibre_families(gt).contains(t),
            "{t} has d2 = <2,3> but is in none of the five families"
        );
        return positive(Provenance::EllipticBase);
    }
    if base == gens(&[2, 5]) {
        return positive(Provenance::BaseTwoFive);
    }
    if base == gens(&[3, 4, 5]) {
        if t == &gens(&[3, 5, 7]) {
            return negative(Provenance::Theorem2Exception);
        }
        let named = [&[5, 6, 7, 8][..], &[3, 7, 8], &[3, 5]];
        if named.iter().any(|g| &gens(g) == t) {
            return positive(Provenance::Theorem1);
        }
        return positive(Provenance::Theorem2);
    }
    ClassificationVerdict {
        verdict: Verdict::Unknown,
        provenance: Provenance::BeyondKnownResults,
        witness: None,
    }
}
