use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid one-line word {0:?}: not a permutation of 1..=n")]
    InvalidWord(Vec<usize>),

    #[error("cannot parse permutation from {0:?}")]
    ParsePerm(String),

    #[error("size mismatch: permutations of S_{0} and S_{1}")]
    SizeMismatch(usize, usize),

    #[error("transposition ({i} {j}) out of range for S_{n}")]
    BadTransposition { i: usize, j: usize, n: usize },

    #[error("{0} is not <= {1} in Bruhat order")]
    NotComparable(String, String),

    #[error("exponent {exp} has wrong parity for length {len}: not a valid R-tilde polynomial")]
    ParityViolation { exp: i64, len: usize },

    #[error("negative exponent {0} where a plain polynomial was required")]
    NegativeExponent(i64),

    #[error("{members:?} is not an order ideal of the interval: {reason}")]
    NotAnIdeal { members: Vec<String>, reason: String },

    #[error("n = {n} exceeds the guard {guard} for {what}")]
    TooLarge { n: usize, guard: usize, what: &'static str },

    #[error("element {0} does not lie in the interval")]
    NotInInterval(String),

    #[error("invalid polynomial JSON: {0}")]
    PolyJson(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
