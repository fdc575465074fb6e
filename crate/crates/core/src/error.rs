use thiserror::Error;

use crate::algebra::ValidationReport;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("malformed algebra input: {0}")]
    MalformedAlgebra(String),

    #[error("algebra validation failed:\n{0}")]
    InvalidAlgebra(ValidationReport),

    #[error("nilpotency step {step} exceeds the supported truncation depth 4")]
    UnsupportedStep { step: usize },

    #[error("coordinate convention mismatch: expected {expected}, got {got}")]
    ConventionMismatch { expected: &'static str, got: &'static str },

    #[error("operation requires a Heisenberg-type algebra: {0}")]
    NotHeisenberg(String),

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(f64),

    #[error("algebra has no second layer (step {0})")]
    NoSecondLayer(usize),

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator count {d} exceeds the supported cap {cap}")]
    CliffordSizeCap { d: usize, cap: usize },

    #[error("pair count 2m = {two_m} exceeds generator count d = {d}")]
    PairingOutOfRange { two_m: usize, d: usize },

    #[error("pair product c(e_k)c(e_l) requires k != l")]
    EqualPairIndices,

    #[error("central parameter tau must be nonzero")]
    ZeroTau,

    #[error("lattice vector has wrong parity for the spin structure at component {0}")]
    ParityMismatch(usize),

    #[error("operator assembly is not Hermitian: residual {residual:.3e} exceeds {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("spectral cutoffs too small: {0}")]
    InsufficientCutoffs(String),

    #[error("Levi form is degenerate: {0}")]
    DegenerateLevi(String),

    #[error("theta must lie in (0, 1], got {0}")]
    ThetaOutOfRange(f64),

    #[error("trajectory integration produced a non-finite state")]
    IntegrationBlowUp,

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
