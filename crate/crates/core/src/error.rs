use thiserror::Error;

/// Errors raised by the counting, bounding and runner routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("congruence system is empty")]
    EmptySystem,

    #[error("divisor {divisor} does not divide modulus {modulus}")]
    DivisorMismatch { divisor: u64, modulus: u64 },

    #[error("residue {residue} is not in [0, {modulus})")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("residue {residue} appears more than once")]
    DuplicateResidue { residue: u64 },

    #[error("interval length {length} exceeds modulus {modulus}")]
    IntervalTooLong { length: u64, modulus: u64 },

    #[error("collection size {size} exceeds modulus {modulus}")]
    SizeExceedsModulus { size: u64, modulus: u64 },

    #[error("enumeration needs {needed} candidates, over the cap of {cap}")]
    EnumerationCap { needed: u64, cap: u64 },

    #[error("size {size} cannot be spread over {length} slots capped at {cap}")]
    Infeasible { size: u64, cap: u64, length: u64 },

    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is not sorted non-decreasing")]
    Unsorted,

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("runner speeds must be distinct (both are {0})")]
    EqualSpeeds(u64),

    #[error("runner speed must be positive")]
    ZeroSpeed,

    #[error("runner count k must be at least 2, got {0}")]
    TooFewRunners(u64),

    #[error("Q = {q} is not divisible by (k+1)*speed = {required}")]
    Divisibility { q: u64, required: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
