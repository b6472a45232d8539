//! Generator vector fields, invariant frames and coframes, and invariant tensors.
//!
//! Tangent vectors are rows `(uᵀ, s)` of length `d + 1`. For `X` at the identity
//!
//! ```text
//! 𝓛_X(v,t) = X · [[1, 0], [vᵀJᵀ, 1]]        (left generator)
//! 𝓡_X(v,t) = X · [[e^{tJᵀ}, 0], [0, 1]]     (right generator)
//! ```
//!
//! Right generators are left-invariant, so the left-invariant frame is the set of
//! columns of `e^{tJ} ⊕ 1`, and the right-invariant frame the columns of
//! `[[1, Jv], [0, 1]]`. The dual coframes are the rows of the inverses.

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{max_abs, plus_one, unipotent_last_column};
use crate::{CMatrix, CRow, Side, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameKind {
    LeftFrame,
    RightFrame,
    LeftCoframe,
    RightCoframe,
}

impl FrameKind {
    pub const ALL: [FrameKind; 4] = [
        FrameKind::LeftFrame,
        FrameKind::RightFrame,
        FrameKind::LeftCoframe,
        FrameKind::RightCoframe,
    ];

    pub fn frame(side: Side) -> Self {
        match side {
            Side::Left => FrameKind::LeftFrame,
            Side::Right => FrameKind::RightFrame,
        }
    }

    pub fn coframe(side: Side) -> Self {
        match side {
            Side::Left => FrameKind::LeftCoframe,
            Side::Right => FrameKind::RightCoframe,
        }
    }

    pub fn side(self) -> Side {
        match self {
            FrameKind::LeftFrame | FrameKind::LeftCoframe => Side::Left,
            FrameKind::RightFrame | FrameKind::RightCoframe => Side::Right,
        }
    }

    pub fn is_coframe(self) -> bool {
        matches!(self, FrameKind::LeftCoframe | FrameKind::RightCoframe)
    }

    pub fn name(self) -> &'static str {
        match self {
            FrameKind::LeftFrame => "left_frame",
            FrameKind::RightFrame => "right_frame",
            FrameKind::LeftCoframe => "left_coframe",
            FrameKind::RightCoframe => "right_coframe",
        }
    }
}

fn check_row(x: &CRow, point: &GroupElement) -> Result<()> {
    let n = point.group().dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    Ok(())
}

/// `𝓛_X(v,t) = (u + s·Jv, s)` for `X = (uᵀ, s)`.
pub fn left_generator(x: &CRow, point: &GroupElement) -> Result<CRow> {
    check_row(x, point)?;
    let d = point.group().d();
    let s = x[d];
    let jv = point.group().j() * point.v();
    Ok(CRow::from_fn(d + 1, |_, j| {
        if j < d {
            x[j] + s * jv[j]
        } else {
            s
        }
    }))
}

/// `𝓡_X(v,t) = (e^{tJ} u, s)` for `X = (uᵀ, s)`.
pub fn right_generator(x: &CRow, point: &GroupElement) -> Result<CRow> {
    check_row(x, point)?;
    let group = point.group();
    let d = group.d();
    let u = crate::CVector::from_fn(d, |i, _| x[i]);
    let moved = group.jordan().exp(point.t()) * u;
    Ok(CRow::from_fn(
        d + 1,
        |_, j| if j < d { moved[j] } else { x[d] },
    ))
}

/// Frame (fields as columns) or coframe (covectors as rows) at a point.
pub fn frame_at(kind: FrameKind, point: &GroupElement) -> CMatrix {
    let group = point.group();
    match kind {
        FrameKind::LeftFrame => plus_one(&group.jordan().exp(point.t())),
        FrameKind::LeftCoframe => plus_one(&group.jordan().exp(-point.t())),
        FrameKind::RightFrame => unipotent_last_column(&(group.j() * point.v())),
        FrameKind::RightCoframe => unipotent_last_column(&-(group.j() * point.v())),
    }
}

/// Antiholomorphic counterpart: the elementwise conjugate.
pub fn antiholomorphic_frame_at(kind: FrameKind, point: &GroupElement) -> CMatrix {
    frame_at(kind, point).map(|z| z.conj())
}

/// Holomorphic derivatives `∂C/∂z^ℓ` of the coframe at `point`, one matrix per
/// coordinate `z^ℓ` (`ℓ < d` for `v`, `ℓ = d` for `t`). The coframe is
/// holomorphic, so its antiholomorphic derivatives are the conjugates of
/// these for the conjugate coframe and zero otherwise.
pub fn coframe_derivatives(side: Side, point: &GroupElement) -> Vec<CMatrix> {
    let group = point.group();
    let d = group.d();
    let n = d + 1;
    let mut out = vec![CMatrix::zeros(n, n); n];
    match side {
        Side::Left => {
            // ∂_t (e^{−tJ} ⊕ 1) = −J e^{−tJ} ⊕ 0
            let block = -group.jordan().exp_derivative(-point.t());
            out[d].view_mut((0, 0), (d, d)).copy_from(&block);
        }
        Side::Right => {
            // ∂_{v^ℓ} [[1, −Jv], [0, 1]] puts −J e_ℓ in the last column
            for (l, m) in out.iter_mut().take(d).enumerate() {
                let col = -group.j().column(l);
                m.view_mut((0, d), (d, 1)).copy_from(&col);
            }
        }
    }
    out
}

/// Residual of the invariance of a frame or coframe under translation by `g`.
///
/// Frames are pushed forward: `‖dΦ_g · F(p) − F(g·p)‖` for left kinds and
/// `‖dΨ_g(p) · F(p) − F(p·g)‖` for right kinds. Coframes are pulled back:
/// `‖C(g·p) · dΦ_g − C(p)‖`, respectively `‖C(p·g) · dΨ_g(p) − C(p)‖`.
pub fn check_frame_invariance(
    kind: FrameKind,
    g: &GroupElement,
    point: &GroupElement,
) -> Result<f64> {
    g.check_same(point)?;
    let (moved, jac) = match kind.side() {
        Side::Left => (g.multiply(point)?, g.left_translation_jacobian()),
        Side::Right => (point.multiply(g)?, g.right_translation_jacobian(point)?),
    };
    let here = frame_at(kind, point);
    let there = frame_at(kind, &moved);
    let residual = if kind.is_coframe() {
        there * jac - here
    } else {
        jac * here - there
    };
    Ok(max_abs(&residual))
}

/// Default bound on the total rank `m + n + p + q` of an invariant tensor.
pub const DEFAULT_MAX_RANK: usize = 4;

/// Type `(m, n, p, q)`: `m` holomorphic and `p` antiholomorphic vector slots,
/// `n` holomorphic and `q` antiholomorphic covector slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSignature {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl TensorSignature {
    pub fn new(m: usize, n: usize, p: usize, q: usize) -> Self {
        TensorSignature { m, n, p, q }
    }

    /// The signature of a Hermitian form, `(0, 1, 0, 1)`.
    pub fn hermitian() -> Self {
        TensorSignature::new(0, 1, 0, 1)
    }

    pub fn rank(&self) -> usize {
        self.m + self.n + self.p + self.q
    }
}

/// Invariant tensor field, stored by its constant coefficients in the invariant
/// frame of `side`.
///
/// Coefficients are row-major over the index order
/// `T^{i₁…i_m, k₁…k_p}_{j₁…j_n, ℓ₁…ℓ_q}`, each index of extent `dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTensor {
    signature: TensorSignature,
    dim: usize,
    side: Side,
    coeffs: Vec<C64>,
}

impl InvariantTensor {
    pub fn new(
        signature: TensorSignature,
        dim: usize,
        side: Side,
        coeffs: Vec<C64>,
    ) -> Result<Self> {
        Self::with_rank_limit(signature, dim, side, coeffs, DEFAULT_MAX_RANK)
    }

    pub fn with_rank_limit(
        signature: TensorSignature,
        dim: usize,
        side: Side,
        coeffs: Vec<C64>,
        max_rank: usize,
    ) -> Result<Self> {
        let rank = signature.rank();
        if rank > max_rank {
            return Err(Error::Signature(format!(
                "total rank {rank} exceeds the limit {max_rank}"
            )));
        }
        let expected = dim.pow(rank as u32);
        if coeffs.len() != expected {
            return Err(Error::Signature(format!(
                "expected {expected} coefficients for rank {rank} and extent {dim}, got {}",
                coeffs.len()
            )));
        }
        Ok(InvariantTensor {
            signature,
            dim,
            side,
            coeffs,
        })
    }

    /// Rank-2 `(0,1,0,1)` tensor from a coefficient matrix `ĥ`.
    pub fn from_hermitian_coeffs(h: &CMatrix, side: Side) -> Result<Self> {
        let n = h.nrows();
        let coeffs = (0..n * n).map(|k| h[(k / n, k % n)]).collect();
        Self::new(TensorSignature::hermitian(), n, side, coeffs)
    }

    pub fn signature(&self) -> TensorSignature {
        self.signature
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coordinate components at `point`, in the same index layout as the
    /// coefficients.
    pub fn evaluate(&self, point: &GroupElement) -> Result<TensorComponents> {
        let n = point.group().dim();
        if n != self.dim {
            return Err(Error::Signature(format!(
                "tensor extent {} does not match group dimension {n}",
                self.dim
            )));
        }
        let frame = frame_at(FrameKind::frame(self.side), point);
        let coframe = frame_at(FrameKind::coframe(self.side), point);
        let frame_bar = frame.map(|z| z.conj());
        let lower = coframe.transpose();
        let lower_bar = lower.map(|z| z.conj());

        let sig = self.signature;
        let mut slots: Vec<&CMatrix> = Vec::with_capacity(sig.rank());
        slots.extend(std::iter::repeat_n(&frame, sig.m));
        slots.extend(std::iter::repeat_n(&frame_bar, sig.p));
        slots.extend(std::iter::repeat_n(&lower, sig.n));
        slots.extend(std::iter::repeat_n(&lower_bar, sig.q));

        let mut data = self.coeffs.clone();
        let rank = slots.len();
        for (axis, m) in slots.into_iter().enumerate() {
            data = apply_along_axis(&data, n, rank, axis, m);
        }
        Ok(TensorComponents {
            signature: sig,
            dim: n,
            data,
        })
    }
}

/// `out[…, a, …] = Σ_i m[a, i] · data[…, i, …]` along `axis`.
fn apply_along_axis(data: &[C64], dim: usize, rank: usize, axis: usize, m: &CMatrix) -> Vec<C64> {
    let inner = dim.pow((rank - axis - 1) as u32);
    let outer = data.len() / (inner * dim);
    let mut out = vec![C64::new(0.0, 0.0); data.len()];
    for o in 0..outer {
        for a in 0..dim {
            for i in 0..dim {
                let w = m[(a, i)];
                if w == C64::new(0.0, 0.0) {
                    continue;
                }
                let src = (o * dim + i) * inner;
                let dst = (o * dim + a) * inner;
                for k in 0..inner {
                    out[dst + k] += w * data[src + k];
                }
            }
        }
    }
    out
}

/// Coordinate-basis components of a tensor at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorComponents {
    pub signature: TensorSignature,
    pub dim: usize,
    pub data: Vec<C64>,
}

impl TensorComponents {
    pub fn get(&self, index: &[usize]) -> C64 {
        let flat = index.iter().fold(0, |acc, &i| acc * self.dim + i);
        self.data[flat]
    }

    /// Rank-2 components as a matrix.
    pub fn to_matrix(&self) -> Option<CMatrix> {
        (self.signature.rank() == 2)
            .then(|| CMatrix::from_row_slice(self.dim, self.dim, &self.data))
    }
}
