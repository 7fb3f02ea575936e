use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is outside the supported range p > 3")]
    PrimeTooSmall(u64),

    #[error("congruence exponent must be at least 1, got {0}")]
    InvalidExponent(u32),

    #[error("{a} is not invertible modulo {p}")]
    NotInvertible { a: i64, p: u64 },

    #[error("{check} requires p \u{2261} {residue} (mod {modulus}), got p = {p}")]
    ResidueClass {
        check: &'static str,
        p: u64,
        modulus: u64,
        residue: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index {index} exceeds the configured table cap {cap}")]
    IndexCap { index: u64, cap: u64 },

    #[error("inconsistent computation: {0}")]
    Inconsistent(String),

    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
