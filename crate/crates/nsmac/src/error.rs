use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero fraction")]
    DivisionByZero,

    #[error("operator index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("Yang operator parameter equals 1 (pole in the operator)")]
    AlphaIsOne,

    #[error("polynomial is not a product of monomials and (1-q^a t^b) factors; residual {residual}")]
    NotProductForm { residual: String },

    #[error("invalid step {step} at vertex {vertex}")]
    InvalidStep { step: String, vertex: String },

    #[error("certificate endpoints do not match: {left} vs {right}")]
    EndpointMismatch { left: String, right: String },

    #[error("jump data does not match the spectral vector: {0}")]
    SpectralMismatch(String),

    #[error("polynomial degenerates at the specialization point; vanishing factor 1-q^{a}t^{b}")]
    DegeneratePolynomial { a: u32, b: i64 },

    #[error("parameter out of range: {0}")]
    RangeViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("computation exceeded the configured resource limit: {0}")]
    ResourceLimit(String),

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
