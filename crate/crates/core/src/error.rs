use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus (need a prime in 2..=97)")]
    BadPrime(u64),

    #[error("algebra needs at least 2 vertices, got n = {0}")]
    BadVertexCount(usize),

    #[error("invalid label: {0}")]
    Label(String),

    #[error("label syntax error: {0}")]
    LabelSyntax(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("representation shape error: {0}")]
    Shape(String),

    #[error("relation violated: the loop does not square to zero")]
    Relation,

    #[error("modules live over different algebras: {0}")]
    ContextMismatch(String),

    #[error("submodule witness is not closed under the structure maps: {0}")]
    Witness(String),

    #[error("module of total dimension {total} exceeds the configured ceiling {ceiling}")]
    DimCeiling { total: usize, ceiling: usize },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("need at least {needed} primes, got {given}")]
    InsufficientPrimes { needed: usize, given: usize },

    #[error("hypothesis of the composition identity fails: {0}")]
    Hypothesis(String),

    #[error("representation file: {0}")]
    Json(String),

    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
