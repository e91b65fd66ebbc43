use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u32>),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("ring of size {size} exceeds the configured maximum of {cap}")]
    RingTooLarge { size: u64, cap: u64 },
    #[error("element code {code} is out of range for a ring of size {size}")]
    ElementOutOfRange { code: u64, size: u64 },
    #[error("operands live in different ring or twist contexts")]
    ContextMismatch,
    #[error("automorphism x -> x^(p^{0}) does not exist in this ring")]
    UnsupportedAutomorphism(u32),
    #[error("delta is not a sigma-derivation: {0}")]
    InvalidDerivation(String),
    #[error("leading coefficient of the divisor is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("operation requires delta = 0")]
    DeltaNotZero,
    #[error("polynomial of degree {degree} is too large for an algebra of degree {m}")]
    DegreeTooHigh { degree: usize, m: usize },
    #[error("modulus must have degree at least 2, got {0}")]
    DegreeTooLow(usize),
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator is not a monic right divisor of f of degree below m")]
    NotARightDivisor,
    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u64 },
    #[error("witness does not certify the requested relation")]
    WitnessInvalid,
    #[error("polynomial is not of the constacyclic shape t^m - a")]
    NotConstacyclic,
    #[error("invalid monomial degree k = {k}: {reason}")]
    InvalidK { k: usize, reason: String },
    #[error("element is not a unit")]
    NonUnit,
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub(crate) fn check_cap(needed: u128, cap: u64) -> Result<()> {
    if needed > cap as u128 {
        Err(Error::EnumerationCapExceeded { needed, cap })
    } else {
        Ok(())
    }
}
