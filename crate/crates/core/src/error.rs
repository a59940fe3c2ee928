use thiserror::Error;

/// Everything that can go wrong when building or checking a map.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("modulus {n} exceeds the configured cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("determinant of ({a}, {b}, {c}, {d}) is not 1 mod {n}")]
    NotUnimodular { a: u64, b: u64, c: u64, d: u64, n: u64 },

    #[error("{m} does not divide {n}")]
    NotDivisor { n: u64, m: u64 },

    #[error("gcd({a}, {c}, {n}) != 1")]
    NotPrimitive { a: u64, c: u64, n: u64 },

    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("graph has a loop at vertex {0}")]
    Loop(usize),

    #[error("graph is not regular: vertex {vertex} has degree {found}, expected {expected}")]
    NotRegular { vertex: usize, found: usize, expected: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
