use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Verification routines report failed identities through their return
/// values; an `Error` means the computation itself could not be carried out.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chain complex is not a complex: {0}")]
    NotAComplex(String),
    #[error("Gröbner basis exceeded the size bound of {bound} elements")]
    BasisSizeExceeded { bound: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("insufficient truncation: {0}")]
    InsufficientTruncation(String),
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },
    #[error("length underflow: {0}")]
    LengthUnderflow(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
