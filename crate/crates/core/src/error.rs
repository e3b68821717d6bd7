use alloc::string::String;

use crate::rank::AxiomViolation;
use crate::subset::GroundSubset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet size {0} unsupported (need 2 <= q <= 256)")]
    InvalidAlphabet(usize),
    #[error("ground set of size {0} exceeds the supported maximum of 20")]
    GroundTooLarge(usize),
    #[error("element {index} out of range for ground set {{1..{n}}}")]
    InvalidSubset { index: usize, n: usize },
    #[error("malformed subset element `{0}`")]
    MalformedSubset(String),
    #[error("ground set sizes differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("symbol {symbol} at coordinate {coordinate} is outside the alphabet of size {q}")]
    SymbolOutOfRange { symbol: usize, coordinate: usize, q: usize },
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("duplicate codeword")]
    DuplicateWord,
    #[error("a code needs at least one word")]
    EmptyCode,
    #[error("not almost affine: |C_X| = {size} is not a power of {q} for X = {subset}")]
    NotAlmostAffine { subset: GroundSubset, size: usize, q: usize },
    #[error("word is not a codeword")]
    NotACodeword,
    #[error("expected {expected} values, got {got}")]
    TableSize { expected: usize, got: usize },
    #[error("not a demi-matroid (member {index}): {violation}")]
    NotDemimatroid { index: usize, violation: AxiomViolation },
    #[error("not a flag: member {index} exceeds member {previous} at {subset}", previous = index - 1)]
    NotAFlag { index: usize, subset: GroundSubset },
    #[error("a flag needs at least one member")]
    EmptyFlag,
    #[error("not a Latin square: {0}")]
    InvalidLatinSquare(String),
    #[error("{basis} is not a basis of the code's matroid")]
    InvalidBasis { basis: GroundSubset },
    #[error("known set {known} must avoid the basis {basis}")]
    KnownIntersectsBasis { known: GroundSubset, basis: GroundSubset },
    #[error("word is not in the overcode D_(X,M)")]
    NotInOvercode,
    #[error("{what} exceeds the enumeration limit ({size} > {limit})")]
    Infeasible { what: &'static str, size: u128, limit: u128 },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    /// A statement that holds for every valid input was observed to fail.
    /// Reaching this means a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
