use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier mismatch: expected {expected}, got {got}")]
    CarrierMismatch { expected: String, got: String },

    #[error("integer overflow in group arithmetic")]
    Overflow,

    #[error("element is not in the positive cone: {0}")]
    NotPositive(String),

    #[error("group capability missing: {0}")]
    CapabilityMissing(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("carrier not enumerable: {0}")]
    NotEnumerable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid cone specification: {0}")]
    ConeSpec(String),

    #[error("pea file format error: {0}")]
    PeaFormat(String),

    #[error("unknown element id: {0}")]
    UnknownId(String),

    #[error("oracle hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("refinement oracle failure: {0}")]
    Oracle(String),

    #[error("no unit-bounded decomposition found: {0}")]
    Decomposition(String),

    #[error("undefined partial sum: {0}")]
    UndefinedSum(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
