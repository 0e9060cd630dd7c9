//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by state construction, inversion and evaluation.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// The state matrix is (numerically) singular: |det Ψ| fell below the
    /// scale-relative threshold.  Such states (Majorana/Weyl/flag-dipole
    /// classes) cannot be inverted.
    #[error("singular state: |det Psi| = {det_mag:.3e} below threshold {threshold:.3e}")]
    SingularState { det_mag: f64, threshold: f64 },

    /// The inverted operator is not Hermitian within tolerance: the requested
    /// dynamics is not reachable by an electromagnetic field.
    #[error("non-physical dynamics: hermiticity residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    NonPhysicalDynamics { residual: f64, tolerance: f64 },

    /// An elementary function was applied outside its real domain
    /// (e.g. arcsin of a value with magnitude above one).
    #[error("domain error: {func}({value:.6e}) outside the real domain")]
    Domain { func: &'static str, value: f64 },

    /// The bilinear density vanished where a velocity was requested.
    #[error("zero density: J_D^0 vanished at the probed point")]
    ZeroDensity,

    /// A scenario parameter violated its precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Expression source failed to parse.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// An identifier in an expression has no binding.
    #[error("unknown identifier `{name}`")]
    UnknownIdentifier { name: String },
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
