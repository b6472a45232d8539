use thiserror::Error;

use crate::hermitian::KahlerVerdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or invalid JSON input; `path` locates the offending field.
    #[error("{path}: {message}")]
    Spec { path: String, message: String },

    #[error("operands belong to different groups")]
    DescriptorMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    #[error(
        "v is not in ker J (residual {residual:e}); the closed-form exponential does not apply"
    )]
    NotInKernel { residual: f64 },

    #[error("coefficient matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("coefficient matrix is not positive definite (smallest pivot {pivot:e})")]
    NotPositiveDefinite { pivot: f64 },

    #[error("operation requires a {expected}-invariant form")]
    WrongSide { expected: &'static str },

    #[error("tensor signature mismatch: {0}")]
    Signature(String),

    #[error("integration box is empty along axis {axis}")]
    EmptyBox { axis: usize },

    #[error("generator {index} is not central (kernel residual {kernel_residual:e}, torus residual {torus_residual:e})")]
    NonCentral {
        index: usize,
        kernel_residual: f64,
        torus_residual: f64,
    },

    #[error("generators {first} and {second} do not commute (residual {residual:e})")]
    NonCommuting {
        first: usize,
        second: usize,
        residual: f64,
    },

    /// The two Kähler checkers reached different conclusions. This indicates a
    /// bug, never a property of the input.
    #[error("Kähler checkers disagree: obstruction {:e}, dω residual {:e}", .0.obstruction_norm, .0.domega_residual)]
    CheckerDisagreement(Box<KahlerVerdict>),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn spec(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Spec {
            path: path.into(),
            message: message.into(),
        }
    }
}
