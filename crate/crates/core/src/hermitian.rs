//! Invariant Hermitian metrics and the two Kähler-obstruction computations.
//!
//! An invariant metric is `h = ĥ_{ij} X^i ⊗ X̄^j` with a constant Hermitian
//! positive-definite `ĥ` in an invariant coframe; its fundamental form is
//! `ω = (i/2) ĥ_{ij} X^i ∧ X̄^j`, i.e. `ω̂ = (i/2) ĥ`.
//!
//! Closure of `ω` is decided twice, independently:
//!
//! 1. Matrix reduction: with `X = e^{−tJ} ⊕ 1` the coefficient matrix
//!    `Γ = Xᵀ ω̂ X̄` of `ω` in coordinates is constant in `t, t̄` iff
//!    `(−J ⊕ 0)ᵀ ω̂ = 0` ([`kahler_obstruction`]).
//! 2. Structure constants: on the complexified invariant frame
//!    `dω(X,Y,Z) = −ω([X,Y],Z) + ω([X,Z],Y) − ω([Y,Z],X)` because `ω` has
//!    constant coefficients ([`domega_structure_constants`]).
//!
//! [`domega_coordinates`] evaluates `dω` from coordinate derivatives of the
//! coframe and reads it back on the invariant frame; it cross-checks both.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frames::{coframe_derivatives, frame_at, FrameKind};
use crate::group::{GroupDescriptor, GroupElement};
use crate::json::{matrix_from_json, matrix_to_json};
use crate::linalg::{all_finite, frobenius, imag_unit, max_abs, plus_zero};
use crate::{c, CMatrix, Side, C64};

/// Hermitian symmetry tolerance, relative to `max(1, max |ĥ_{ij}|)`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Smallest admissible Cholesky pivot.
pub const PIVOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    /// Pulled back along a covering quotient map `G̃ → G̃/Γ`.
    PulledBack,
}

/// Constant coefficient matrix `ĥ` of an invariant Hermitian metric.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm {
    coeffs: CMatrix,
    side: Side,
    provenance: Provenance,
}

impl HermitianForm {
    pub fn new(coeffs: CMatrix, side: Side) -> Result<Self> {
        if !coeffs.is_square() {
            return Err(Error::DimensionMismatch {
                expected: coeffs.nrows(),
                found: coeffs.ncols(),
            });
        }
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite("metric coefficients"));
        }
        let residual = max_abs(&(&coeffs - coeffs.adjoint()));
        if residual > HERMITIAN_TOL * max_abs(&coeffs).max(1.0) {
            return Err(Error::NotHermitian { residual });
        }
        let pivot = smallest_cholesky_pivot(&coeffs);
        if pivot.is_nan() || pivot <= PIVOT_TOL {
            return Err(Error::NotPositiveDefinite { pivot });
        }
        Ok(HermitianForm {
            coeffs,
            side,
            provenance: Provenance::Direct,
        })
    }

    pub fn identity(n: usize, side: Side) -> Self {
        HermitianForm {
            coeffs: CMatrix::identity(n, n),
            side,
            provenance: Provenance::Direct,
        }
    }

    pub fn coeffs(&self) -> &CMatrix {
        &self.coeffs
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.coeffs.nrows()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Same coefficients, multiplied by `k > 0`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(&self.coeffs * c(k, 0.0), self.side)
    }

    /// Parses `{"h": [[[re,im], ...], ...], "side": "left"|"right"}`; `side`
    /// falls back to `default_side` when absent.
    pub fn from_json(value: &Value, default_side: Side) -> Result<Self> {
        let h = value
            .get("h")
            .ok_or_else(|| Error::spec("h", "missing field"))?;
        let coeffs = matrix_from_json(h, "h")?;
        let side = match value.get("side") {
            None => default_side,
            Some(s) => s
                .as_str()
                .ok_or_else(|| Error::spec("side", "expected a string"))?
                .parse()
                .map_err(|_| Error::spec("side", "expected `left` or `right`"))?,
        };
        Self::new(coeffs, side)
    }

    pub fn to_json(&self) -> Value {
        json!({ "h": matrix_to_json(&self.coeffs), "side": self.side.as_str() })
    }
}

/// Smallest pivot of an LDL*-style Cholesky sweep; non-positive (or NaN) when
/// the matrix is not positive definite.
pub fn smallest_cholesky_pivot(h: &CMatrix) -> f64 {
    let n = h.nrows();
    let mut l = CMatrix::zeros(n, n);
    let mut smallest = f64::INFINITY;
    for j in 0..n {
        let mut diag = h[(j, j)].re;
        for k in 0..j {
            diag -= l[(j, k)].norm_sqr();
        }
        smallest = smallest.min(diag);
        if diag.is_nan() || diag <= 0.0 {
            return diag;
        }
        let root = diag.sqrt();
        l[(j, j)] = c(root, 0.0);
        for i in j + 1..n {
            let mut s = h[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / root;
        }
    }
    smallest
}

/// `ω̂ = (i/2) ĥ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalForm {
    omega_hat: CMatrix,
    side: Side,
}

impl FundamentalForm {
    pub fn omega_hat(&self) -> &CMatrix {
        &self.omega_hat
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.omega_hat.nrows()
    }

    /// Recovers `ĥ = −2i ω̂`.
    pub fn metric_coeffs(&self) -> CMatrix {
        &self.omega_hat * c(0.0, -2.0)
    }
}

pub fn fundamental_form(h: &HermitianForm) -> FundamentalForm {
    FundamentalForm {
        omega_hat: h.coeffs() * (imag_unit() * 0.5),
        side: h.side(),
    }
}

fn check_dim(descriptor: &GroupDescriptor, omega: &FundamentalForm) -> Result<()> {
    if omega.dim() != descriptor.dim() {
        return Err(Error::DimensionMismatch {
            expected: descriptor.dim(),
            found: omega.dim(),
        });
    }
    Ok(())
}

/// Matrix whose vanishing is equivalent to `dω = 0`.
///
/// Left-invariant forms: `(−J ⊕ 0)ᵀ ω̂`. Right-invariant forms: row `ℓ` is the
/// last row of `K_ℓᵀ ω̂` with `K_ℓ = (∂_{v^ℓ} Y) Y⁻¹` for the right coframe `Y`,
/// and the last row is zero.
pub fn kahler_obstruction(
    descriptor: &Arc<GroupDescriptor>,
    omega: &FundamentalForm,
) -> Result<CMatrix> {
    check_dim(descriptor, omega)?;
    let n = descriptor.dim();
    let d = descriptor.d();
    match omega.side() {
        Side::Left => Ok(plus_zero(&-descriptor.j()).transpose() * omega.omega_hat()),
        Side::Right => {
            let base = descriptor.identity();
            let inv = frame_at(FrameKind::RightFrame, &base);
            let mut out = CMatrix::zeros(n, n);
            for (l, deriv) in coframe_derivatives(Side::Right, &base)
                .iter()
                .take(d)
                .enumerate()
            {
                let k = deriv * &inv;
                let row = k.transpose() * omega.omega_hat();
                out.row_mut(l).copy_from(&row.row(d));
            }
            Ok(out)
        }
    }
}

fn left_only(omega: &FundamentalForm) -> Result<()> {
    match omega.side() {
        Side::Left => Ok(()),
        Side::Right => Err(Error::WrongSide { expected: "left" }),
    }
}

/// `Γ(t) = Xᵀ ω̂ X̄` with `X = e^{−tJ} ⊕ 1`: the coordinate coefficients of `ω`.
pub fn gamma_matrix(
    descriptor: &Arc<GroupDescriptor>,
    omega: &FundamentalForm,
    t: C64,
) -> Result<CMatrix> {
    check_dim(descriptor, omega)?;
    left_only(omega)?;
    let x = crate::linalg::plus_one(&descriptor.jordan().exp(-t));
    Ok(x.transpose() * omega.omega_hat() * x.map(|z| z.conj()))
}

/// Wirtinger derivatives `(∂Γ/∂t, ∂Γ/∂t̄)` from `∂X/∂t = −J e^{−tJ} ⊕ 0`.
pub fn gamma_derivatives(
    descriptor: &Arc<GroupDescriptor>,
    omega: &FundamentalForm,
    t: C64,
) -> Result<(CMatrix, CMatrix)> {
    check_dim(descriptor, omega)?;
    left_only(omega)?;
    let x = crate::linalg::plus_one(&descriptor.jordan().exp(-t));
    let dx = plus_zero(&-descriptor.jordan().exp_derivative(-t));
    let x_bar = x.map(|z| z.conj());
    let dt = dx.transpose() * omega.omega_hat() * &x_bar;
    let dt_bar = x.transpose() * omega.omega_hat() * dx.map(|z| z.conj());
    Ok((dt, dt_bar))
}

/// Bracket of two complexified frame vectors, by index: `0..n` are `V_i`
/// (with `V_{n-1} = e₀`), `n..2n` their conjugates. Right-invariant fields
/// carry the opposite bracket.
fn frame_bracket(descriptor: &GroupDescriptor, side: Side, a: usize, b: usize) -> Vec<C64> {
    let n = descriptor.dim();
    let d = descriptor.d();
    let j = descriptor.j();
    let mut out = vec![c(0.0, 0.0); 2 * n];
    let sign = match side {
        Side::Left => 1.0,
        Side::Right => -1.0,
    };
    let (conj, a_idx, b_idx) = match (a < n, b < n) {
        (true, true) => (false, a, b),
        (false, false) => (true, a - n, b - n),
        // [V_i, V̄_j] = 0
        _ => return out,
    };
    let offset = if conj { n } else { 0 };
    // [e₀, V_i] = J V_i
    let (i, s) = if a_idx == d && b_idx < d {
        (b_idx, sign)
    } else if b_idx == d && a_idx < d {
        (a_idx, -sign)
    } else {
        return out;
    };
    for k in 0..d {
        let coeff = if conj { j[(k, i)].conj() } else { j[(k, i)] };
        out[offset + k] = coeff * s;
    }
    out
}

/// Largest `|dω(X_r, X_s, X_t)|` over triples of the complexified invariant frame,
/// from the bracket structure alone. Zero iff the descriptor is Abelian.
pub fn domega_structure_constants(
    descriptor: &Arc<GroupDescriptor>,
    omega: &FundamentalForm,
) -> Result<f64> {
    check_dim(descriptor, omega)?;
    let n = descriptor.dim();
    let m = 2 * n;
    // ω on the complexified frame: ω(V_i, V̄_j) = ω̂_ij, antisymmetric
    let mut w = CMatrix::zeros(m, m);
    for i in 0..n {
        for j in 0..n {
            w[(i, n + j)] = omega.omega_hat()[(i, j)];
            w[(n + j, i)] = -omega.omega_hat()[(i, j)];
        }
    }
    let side = omega.side();
    let brackets: Vec<Vec<Vec<C64>>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| frame_bracket(descriptor, side, a, b))
                .collect()
        })
        .collect();
    let pair =
        |x: &[C64], t: usize| -> C64 { x.iter().enumerate().map(|(k, xk)| xk * w[(k, t)]).sum() };
    let mut worst = 0.0f64;
    for r in 0..m {
        for s in 0..m {
            for t in 0..m {
                let value =
                    -pair(&brackets[r][s], t) + pair(&brackets[r][t], s) - pair(&brackets[s][t], r);
                worst = worst.max(value.norm());
            }
        }
    }
    Ok(worst)
}

/// Largest `|dω|` on invariant-frame triples at `point`, with `dω` assembled
/// from analytic coordinate derivatives of the coframe.
///
/// In coordinates `ω = Γ_{ab} dz^a ∧ dz̄^b`, `Γ = Cᵀ ω̂ C̄`, so
/// `dω = ∂_ℓΓ_{ab} dz^ℓ∧dz^a∧dz̄^b + ∂_ℓ̄Γ_{ab} dz̄^ℓ∧dz^a∧dz̄^b`. Both families are
/// contracted with the frame at `point`; by invariance the result does not
/// depend on the point.
pub fn domega_coordinates(
    descriptor: &Arc<GroupDescriptor>,
    omega: &FundamentalForm,
    point: &GroupElement,
) -> Result<f64> {
    check_dim(descriptor, omega)?;
    if !crate::group::same_group(descriptor, point.group()) {
        return Err(Error::DescriptorMismatch);
    }
    let side = omega.side();
    let n = descriptor.dim();
    let coframe = frame_at(FrameKind::coframe(side), point);
    let frame = frame_at(FrameKind::frame(side), point);
    let coframe_bar = coframe.map(|z| z.conj());
    let frame_bar = frame.map(|z| z.conj());
    let derivs = coframe_derivatives(side, point);
    let w = omega.omega_hat();

    // T_A[r,s,u] = Σ ∂_ℓΓ_{ab} F_{ℓr} F_{as} F̄_{bu}
    // T_B[u,r,w] = Σ ∂_ℓ̄Γ_{ab} F̄_{ℓu} F_{ar} F̄_{bw}
    let mut t_a = vec![c(0.0, 0.0); n * n * n];
    let mut t_b = vec![c(0.0, 0.0); n * n * n];
    for (l, dc) in derivs.iter().enumerate() {
        if max_abs(dc) == 0.0 {
            continue;
        }
        let a_l = dc.transpose() * w * &coframe_bar;
        let b_l = coframe.transpose() * w * dc.map(|z| z.conj());
        // congruence by the frame: (Fᵀ A F̄)_{s,u}
        let a_frame = frame.transpose() * a_l * &frame_bar;
        let b_frame = frame.transpose() * b_l * &frame_bar;
        for r in 0..n {
            let f_lr = frame[(l, r)];
            let fb_lr = frame_bar[(l, r)];
            for s in 0..n {
                for u in 0..n {
                    t_a[(r * n + s) * n + u] += f_lr * a_frame[(s, u)];
                    t_b[(r * n + s) * n + u] += fb_lr * b_frame[(s, u)];
                }
            }
        }
    }
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut worst = 0.0f64;
    for r in 0..n {
        for s in 0..n {
            for u in 0..n {
                // dω(X_r, X_s, X̄_u)
                worst = worst.max((t_a[idx(r, s, u)] - t_a[idx(s, r, u)]).norm());
                // dω(X_s, X̄_r, X̄_u)
                worst = worst.max((t_b[idx(r, s, u)] - t_b[idx(u, s, r)]).norm());
            }
        }
    }
    Ok(worst)
}

/// Outcome of [`is_kahler`].
#[derive(Debug, Clone, PartialEq)]
pub struct KahlerVerdict {
    /// Frobenius norm of the matrix obstruction.
    pub obstruction_norm: f64,
    /// Largest structure-constant value of `dω`.
    pub domega_residual: f64,
    pub is_kahler: bool,
    pub method_agreement: bool,
    /// Set for Abelian descriptors, which lie outside the almost Abelian class.
    pub abelian_caveat: bool,
    pub side: Side,
}

impl KahlerVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "obstruction_norm": self.obstruction_norm,
            "domega_residual": self.domega_residual,
            "is_kahler": self.is_kahler,
            "method_agreement": self.method_agreement,
            "abelian_caveat": self.abelian_caveat,
            "side": self.side.as_str(),
        })
    }
}

/// Runs both checkers; the zero threshold is `tol · ‖ĥ‖_F`.
///
/// Returns [`Error::CheckerDisagreement`] (carrying the verdict) when the two
/// computations disagree on whether `dω` vanishes.
pub fn is_kahler(
    descriptor: &Arc<GroupDescriptor>,
    h: &HermitianForm,
    tol: f64,
) -> Result<KahlerVerdict> {
    let omega = fundamental_form(h);
    let obstruction_norm = frobenius(&kahler_obstruction(descriptor, &omega)?);
    let domega_residual = domega_structure_constants(descriptor, &omega)?;
    let threshold = tol * frobenius(h.coeffs());
    let zero_matrix = obstruction_norm <= threshold;
    let zero_structure = domega_residual <= threshold;
    let verdict = KahlerVerdict {
        obstruction_norm,
        domega_residual,
        is_kahler: zero_matrix && zero_structure,
        method_agreement: zero_matrix == zero_structure,
        abelian_caveat: descriptor.is_abelian(),
        side: h.side(),
    };
    if verdict.method_agreement {
        Ok(verdict)
    } else {
        Err(Error::CheckerDisagreement(Box::new(verdict)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::MultiplicityFunction;
    use crate::CVector;

    fn group(triples: &[(C64, usize, usize)]) -> Arc<GroupDescriptor> {
        GroupDescriptor::new(MultiplicityFunction::from_triples(triples).unwrap())
    }

    fn r(x: f64) -> C64 {
        c(x, 0.0)
    }

    fn diag(entries: &[f64]) -> CMatrix {
        CMatrix::from_diagonal(&CVector::from_iterator(
            entries.len(),
            entries.iter().map(|&x| r(x)),
        ))
    }

    #[test]
    fn fundamental_form_examples() {
        let h = HermitianForm::identity(2, Side::Left);
        assert_eq!(
            fundamental_form(&h).omega_hat(),
            &(CMatrix::identity(2, 2) * c(0.0, 0.5))
        );
        let h = HermitianForm::new(diag(&[2.0, 1.0]), Side::Left).unwrap();
        let w = fundamental_form(&h);
        assert_eq!(w.omega_hat()[(0, 0)], c(0.0, 1.0));
        assert_eq!(w.omega_hat()[(1, 1)], c(0.0, 0.5));
        assert_eq!(w.metric_coeffs(), *h.coeffs());
    }

    #[test]
    fn rejects_invalid_metrics() {
        let mut m = CMatrix::identity(2, 2);
        m[(0, 1)] = c(0.5, 0.5);
        assert!(matches!(
            HermitianForm::new(m.clone(), Side::Left),
            Err(Error::NotHermitian { .. })
        ));
        m[(1, 0)] = c(0.5, -0.5);
        assert!(HermitianForm::new(m, Side::Left).is_ok());
        assert!(matches!(
            HermitianForm::new(diag(&[1.0, -1.0]), Side::Left),
            Err(Error::NotPositiveDefinite { .. })
        ));
        assert!(matches!(
            HermitianForm::new(diag(&[1.0, 0.0]), Side::Left),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn obstruction_examples() {
        let g = group(&[(r(1.0), 1, 1)]);
        let w = fundamental_form(&HermitianForm::identity(2, Side::Left));
        let m = kahler_obstruction(&g, &w).unwrap();
        let mut expected = CMatrix::zeros(2, 2);
        expected[(0, 0)] = c(0.0, -0.5);
        assert_eq!(m, expected);
        assert!((frobenius(&m) - 0.5).abs() < 1e-15);

        let abelian = group(&[(r(0.0), 1, 1)]);
        let h = HermitianForm::new(
            CMatrix::from_row_slice(2, 2, &[r(2.0), c(0.1, 0.3), c(0.1, -0.3), r(1.0)]),
            Side::Left,
        )
        .unwrap();
        assert_eq!(
            max_abs(&kahler_obstruction(&abelian, &fundamental_form(&h)).unwrap()),
            0.0
        );

        let nil = group(&[(r(0.0), 2, 1)]);
        let m = kahler_obstruction(
            &nil,
            &fundamental_form(&HermitianForm::identity(3, Side::Left)),
        )
        .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if (i, j) == (1, 0) {
                    c(0.0, -0.5)
                } else {
                    r(0.0)
                };
                assert_eq!(m[(i, j)], expected, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let g = group(&[(r(1.0), 1, 1)]);
        let w = fundamental_form(&HermitianForm::identity(2, Side::Left));
        assert_eq!(gamma_matrix(&g, &w, r(0.0)).unwrap(), *w.omega_hat());
        let t = c(0.3, -0.8);
        let gamma = gamma_matrix(&g, &w, t).unwrap();
        // X = diag(e^{−t}, 1): Γ₀₀ = (i/2) e^{−t} e^{−t̄} = (i/2) e^{−2 Re t}
        assert!((gamma[(0, 0)] - c(0.0, 0.5 * (-0.6f64).exp())).norm() < 1e-15);
        assert_eq!(gamma[(1, 1)], c(0.0, 0.5));
        let (dt, dt_bar) = gamma_derivatives(&g, &w, t).unwrap();
        assert!((dt[(0, 0)] - c(0.0, -0.5 * (-0.6f64).exp())).norm() < 1e-15);
        assert!((dt_bar[(0, 0)] - c(0.0, -0.5 * (-0.6f64).exp())).norm() < 1e-15);

        let abelian = group(&[(r(0.0), 1, 1)]);
        assert_eq!(
            gamma_matrix(&abelian, &w, c(4.0, 1.0)).unwrap(),
            *w.omega_hat()
        );

        let right = fundamental_form(&HermitianForm::identity(2, Side::Right));
        assert!(matches!(
            gamma_matrix(&g, &right, t),
            Err(Error::WrongSide { .. })
        ));
    }

    #[test]
    fn structure_constant_examples() {
        let abelian = group(&[(r(0.0), 1, 2)]);
        let w = fundamental_form(&HermitianForm::identity(3, Side::Left));
        assert_eq!(domega_structure_constants(&abelian, &w).unwrap(), 0.0);

        let g = group(&[(r(1.0), 1, 1)]);
        let w = fundamental_form(&HermitianForm::identity(2, Side::Left));
        let residual = domega_structure_constants(&g, &w).unwrap();
        assert!(residual >= 0.5 - 1e-15);

        let scaled = fundamental_form(&HermitianForm::identity(2, Side::Left).scaled(3.0).unwrap());
        let scaled_residual = domega_structure_constants(&g, &scaled).unwrap();
        assert!((scaled_residual - 3.0 * residual).abs() < 1e-14);
    }

    #[test]
    fn coordinate_route_matches_at_identity() {
        let g = group(&[(r(1.0), 1, 1)]);
        let w = fundamental_form(&HermitianForm::identity(2, Side::Left));
        let coords = domega_coordinates(&g, &w, &g.identity()).unwrap();
        let structure = domega_structure_constants(&g, &w).unwrap();
        assert!((coords - structure).abs() < 1e-8);
        let abelian = group(&[(r(0.0), 1, 1)]);
        let p = abelian
            .element(CVector::from_element(1, c(1.0, 2.0)), c(-1.0, 0.5))
            .unwrap();
        assert_eq!(domega_coordinates(&abelian, &w, &p).unwrap(), 0.0);
    }

    #[test]
    fn verdicts() {
        let g = group(&[(r(1.0), 2, 1)]);
        let v = is_kahler(&g, &HermitianForm::identity(3, Side::Left), 1e-10).unwrap();
        assert!(!v.is_kahler && v.method_agreement && !v.abelian_caveat);

        let abelian = group(&[(r(0.0), 1, 2)]);
        let v = is_kahler(&abelian, &HermitianForm::identity(3, Side::Left), 1e-10).unwrap();
        assert!(v.is_kahler && v.abelian_caveat);
        assert_eq!(v.obstruction_norm, 0.0);

        assert!(matches!(
            is_kahler(&g, &HermitianForm::identity(2, Side::Left), 1e-10),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn metric_json_round_trip() {
        let h = HermitianForm::new(
            CMatrix::from_row_slice(2, 2, &[r(2.0), c(0.1, 0.3), c(0.1, -0.3), r(1.0)]),
            Side::Right,
        )
        .unwrap();
        let text = h.to_json().to_string();
        let back =
            HermitianForm::from_json(&serde_json::from_str(&text).unwrap(), Side::Left).unwrap();
        assert_eq!(back, h);
    }
}
