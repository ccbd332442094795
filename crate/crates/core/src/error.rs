//! Crate-wide error type with stable machine-readable codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group closure exceeded max_order {max_order} (reached {reached} elements)")]
    OrderExceeded { max_order: usize, reached: usize },

    #[error("generator {index} is not a bijection: {reason}")]
    InvalidPermutation { index: usize, reason: String },

    #[error("no prime p ≡ 1 (mod {modulus}) with p > {lower} found below {bound}")]
    PrimeSearchFailed { modulus: u64, lower: u64, bound: u64 },

    #[error("common eigenspace of dimension {dim} > 1 after all class matrices; the table construction is buggy")]
    DegenerateEigenspace { dim: usize },

    #[error("the trivial group has no nontrivial character")]
    TrivialGroup,

    #[error("operation requires nonempty sets: {which}")]
    EmptySet { which: &'static str },

    #[error("character sum {value} is {drift:e} from the nearest integer (allowed {allowed:e}); the table is corrupt")]
    RoundingDrift { value: f64, drift: f64, allowed: f64 },

    #[error("set for `{which}` must be normal (a union of conjugacy classes)")]
    NotNormal { which: &'static str },

    #[error("budget {budget} cannot cover {required} required combinations")]
    BudgetExceeded { budget: u64, required: u64 },

    #[error("propagation precondition failed: {reason}")]
    PreconditionNotCertified { reason: String },

    #[error("{path}:{line}:{column}: {message}")]
    SyntaxError { path: String, line: usize, column: usize, message: String },

    #[error("generator {index} is not a bijection on 0..{degree}")]
    NotABijection { index: usize, degree: usize },

    #[error("character table validation failed: {invariant} (residual {residual:e}, allowed {allowed:e})")]
    ValidationFailed { invariant: String, residual: f64, allowed: f64 },

    #[error("{0}")]
    InvalidInput(String),

    #[error("class-union enumeration needs {classes} classes, above the hard cap of {cap}")]
    TooManyClasses { classes: usize, cap: usize },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code, used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OrderExceeded { .. } => "OrderExceeded",
            Error::InvalidPermutation { .. } => "InvalidPermutation",
            Error::PrimeSearchFailed { .. } => "PrimeSearchFailed",
            Error::DegenerateEigenspace { .. } => "DegenerateEigenspace",
            Error::TrivialGroup => "TrivialGroup",
            Error::EmptySet { .. } => "EmptySet",
            Error::RoundingDrift { .. } => "RoundingDrift",
            Error::NotNormal { .. } => "NotNormal",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::PreconditionNotCertified { .. } => "PreconditionNotCertified",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::NotABijection { .. } => "NotABijection",
            Error::ValidationFailed { .. } => "ValidationFailed",
            Error::InvalidInput(_) => "InvalidInput",
            Error::TooManyClasses { .. } => "TooManyClasses",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
