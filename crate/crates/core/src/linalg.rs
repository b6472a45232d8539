//! Small dense helpers shared by the geometric modules.

use crate::{c, CMatrix, CVector, C64};

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_vec(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `block ⊕ 1`: embeds a `d×d` block in the top-left corner of `I_{d+1}`.
pub fn plus_one(block: &CMatrix) -> CMatrix {
    let d = block.nrows();
    let mut out = CMatrix::identity(d + 1, d + 1);
    out.view_mut((0, 0), (d, d)).copy_from(block);
    out
}

/// `block ⊕ 0`.
pub fn plus_zero(block: &CMatrix) -> CMatrix {
    let d = block.nrows();
    let mut out = CMatrix::zeros(d + 1, d + 1);
    out.view_mut((0, 0), (d, d)).copy_from(block);
    out
}

/// `[[I, col], [0, 1]]` of size `d+1`.
pub fn unipotent_last_column(col: &CVector) -> CMatrix {
    let d = col.len();
    let mut out = CMatrix::identity(d + 1, d + 1);
    out.view_mut((0, d), (d, 1)).copy_from(col);
    out
}

pub fn all_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Real determinant of the underlying real map of a complex-linear map `A`,
/// evaluated as `det(A A*)`.
pub fn real_jacobian_det(a: &CMatrix) -> f64 {
    (a * a.adjoint()).determinant().re
}

pub fn imag_unit() -> C64 {
    c(0.0, 1.0)
}
