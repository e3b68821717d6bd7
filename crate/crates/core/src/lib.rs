//! Almost affine codes, their matroids and demi-matroids, and the wire-tap
//! channel of type II built on them.
//!
//! Everything here is exact: ranks come from integer logarithms of projection
//! sizes and every subset scan is exhaustive over `2^n` sets, so ground sets
//! are capped at [`MAX_GROUND`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod code;
pub mod error;
pub mod latin;
pub mod rank;
pub mod subset;
pub mod wiretap;

pub use code::{exact_log, AffineReport, Alphabet, BlockCode, Symbol, UnanchoredShortening};
pub use error::{Error, Result};
pub use latin::LatinSquare;
pub use rank::{
    flag_duals, flag_rho, pair_rho, profiles, random_demimatroid, random_demimatroid_with,
    random_dominated_with, Axiom, AxiomViolation, EssentialSet, Flag, FlagDuals, PairRejection,
    PairRho, Profile, RankFunction,
};
pub use subset::{all_subsets, subsets_by_size, subsets_of_size, GroundSubset, MAX_GROUND};
pub use wiretap::{
    trailing_basis, Equivocation, Message, Overcode, TapAnalysis, TapScenario, UncertaintyRow,
    UncertaintyTable, WiretapScheme,
};
