//! Subword complexes in finite Coxeter groups.
//!
//! The crate builds the subword complex `Δ(Q, π)` of a word `Q` and a group
//! element `π`, certifies that the Alexander dual ideal has linear quotients in
//! lexicographic order, turns the certificate into a shelling, Betti numbers,
//! Hilbert numerators and regularity bounds, and analyzes the class of words
//! whose dual ideal factors as a monomial times a linear ideal. Every derived
//! number has a brute-force counterpart in [`oracles`].

pub mod cli;
pub mod complexes;
pub mod coxeter;
mod error;
pub mod ideals;
pub mod oracles;
mod positions;
pub mod special;
mod verdict;
pub mod words;

pub use complexes::{ShellingOrder, SimplicialComplex};
pub use coxeter::{CoxeterSystem, Family, GroupElement};
pub use error::{Error, Result};
pub use ideals::{
    BettiTable, HilbertNumerator, LinearQuotientsCertificate, MonomialIdeal, SquarefreeMonomial,
};
pub use positions::PositionSet;
pub use special::SpecialClassReport;
pub use verdict::Verdict;
pub use words::{Representations, Subword, Word};

/// Largest word size the crate accepts; positions are packed into a `u64`.
pub const MAX_POSITIONS: usize = 64;
