//! Complex almost Abelian Lie groups built from multiplicity-function data.
//!
//! A finitely supported multiplicity function `ℵ` (a list of Jordan blocks with
//! multiplicities) fixes a Jordan matrix `J(ℵ)` and with it the simply connected
//! group `G = ℂ^d ⋊ ℂ` with law `[u,s][v,t] = [u + e^{sJ} v, s + t]`. On top of
//! that this crate provides:
//!
//! - [`multiplicity`]: the block data, `J(ℵ)` and its closed-form exponential,
//! - [`group`]: group law, inverses, matrix representation, exponential map,
//!   Lie bracket and the center,
//! - [`measures`]: Haar densities, modular function, translation Jacobians,
//! - [`frames`]: generator fields, invariant (co)frames and invariant tensors,
//! - [`hermitian`]: invariant Hermitian metrics and two independent Kähler
//!   obstruction computations,
//! - [`quotient`]: central discrete subgroups and metrics on `G̃/Γ`,
//! - [`cli`]: the JSON-report front end used by the `almost-abelian` binary.
//!
//! Tangent vectors are row vectors throughout, matching `X · M` formulas for
//! generator fields. Frames store fields as columns, coframes as rows.

pub mod cli;
pub mod error;
pub mod frames;
pub mod group;
pub mod hermitian;
pub mod json;
pub mod linalg;
pub mod measures;
pub mod multiplicity;
pub mod quotient;
pub mod sampling;
pub mod selftest;

pub use error::{Error, Result};
pub use frames::{FrameKind, InvariantTensor, TensorSignature};
pub use group::{
    AlgebraElement, CenterDescription, Confidence, GroupDescriptor, GroupElement, TorusLattice,
};
pub use hermitian::{FundamentalForm, HermitianForm, KahlerVerdict};
pub use measures::{HaarDensity, McEstimate};
pub use multiplicity::{Block, JordanMatrix, MultiplicityFunction};
pub use quotient::{ConnectedVerdict, DiscreteSubgroup};

/// Double-precision complex scalar.
pub type C64 = nalgebra::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;
/// Dense complex row vector; the tangent-vector convention of this crate.
pub type CRow = nalgebra::RowDVector<C64>;

/// Default comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Which translation a structure is invariant under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Usage(format!(
                "side must be `left` or `right`, got `{other}`"
            ))),
        }
    }
}

/// Shorthand for a complex number.
#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
