use core::fmt;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("n must be at least {min} (got {n})")]
    TooSmall { n: u64, min: u64 },
    #[error("vertex {x} is out of range for n = {n}")]
    VertexOutOfRange { x: u64, n: u64 },
    #[error("{size} vertices exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent must be at least {min} (got {got})")]
    Exponent { got: u32, min: u32 },
    #[error("primes must satisfy p < q (got p = {p}, q = {q})")]
    PrimeOrder { p: u64, q: u64 },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("n = {0} is not squarefree")]
    NotSquarefree(u64),
    #[error("G2 is empty for prime n = {0}")]
    EmptyG2(u64),
    #[error("negative Laplacian eigenvalue {0}")]
    NegativeEigenvalue(BigIntDisplay),
    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),
}

/// Wrapper so that [`Error`] stays `Eq` and printable for big values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntDisplay(pub BigInt);

impl fmt::Display for BigIntDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
