use thiserror::Error;

/// Errors raised by the core engine.
///
/// Bounded searches never fail with an error: they report `Unknown` or a
/// truncation flag instead. Errors are reserved for malformed input and
/// violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed matrix text: {0}")]
    Parse(String),
    #[error("diagonal invariant violated: a[{index}][{index}] = {value}, expected 2")]
    Diagonal { index: usize, value: i64 },
    #[error("sign invariant violated at ({i}, {j}): off-diagonal entries must be <= 0 and vanish in pairs")]
    Sign { i: usize, j: usize },
    #[error("matrix is not symmetrizable")]
    Symmetrizability,
    #[error("matrix is not irreducible (Dynkin graph is disconnected)")]
    Irreducibility,
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..{0}")]
    NotPermutation(usize),
    #[error("element is not a reflection")]
    NotReflection,
    #[error("vector {0} is not a real root")]
    NotRealRoot(String),
    #[error("operation requires a {expected} type")]
    WrongType { expected: &'static str },
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("universal weight must be at least 2, got {0}")]
    UniversalWeight(i64),
    #[error("non-exact division {num} / {den}")]
    InexactDivision { num: u128, den: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
