//! Numerical semigroups and double covers.
//!
//! * [`semigroup`]: the canonical [`NumericalSemigroup`] type with membership,
//!   gaps, genus, Frobenius number, Apéry sets and minimal generators.
//! * [`doubling`]: the halving map [`d2`], decompositions
//!   `T = 2H + <n, n + 2 l_1, ...>` and enumeration of `d2`-fibres.
//! * [`census`]: all semigroups of a given genus, by tree walk and by brute force.
//! * [`classify`]: double covering type verdicts with provenance.
//!
//! The enumeration loops run on rayon when the `parallel` feature is enabled;
//! see [`Execution`].

pub mod census;
pub mod classify;
pub mod doubling;
mod error;
mod exec;
pub mod semigroup;

pub use census::{enumerate_genus, enumerate_genus_oracle, filter_by_d2, Census, CensusRecord};
pub use classify::{classify, ClassificationVerdict, Provenance, Verdict};
pub use doubling::{
    d2, decompose, min_odd, preimages, preimages_with, reassemble, DoubleCoverDecomposition,
};
pub use error::{Result, SemigroupError};
pub use exec::Execution;
pub use semigroup::NumericalSemigroup;
