//! Haar densities, the modular function and translation Jacobians.
//!
//! With Lebesgue measure `dv dt` on the global chart `ℂ^d × ℂ`,
//!
//! - left Haar density: `e^{−2 Re tr(tJ)}`,
//! - right Haar density: `1`,
//! - modular function: `Δ(v,t) = e^{−2 Re tr(tJ)}`.
//!
//! Invariance is certified pointwise: the density at the translated point times
//! the real Jacobian determinant of the translation must reproduce the density at
//! the original point. Real Jacobians use `det 𝒥_ℝ = det(𝒥_ℂ 𝒥_ℂ*)`.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement};
use crate::linalg::real_jacobian_det;
use crate::sampling;
use crate::Side;

/// Haar density with respect to Lebesgue measure on the global chart.
#[derive(Debug, Clone)]
pub struct HaarDensity {
    pub side: Side,
    pub descriptor: Arc<GroupDescriptor>,
}

impl HaarDensity {
    pub fn new(side: Side, descriptor: Arc<GroupDescriptor>) -> Self {
        HaarDensity { side, descriptor }
    }

    pub fn at(&self, g: &GroupElement) -> f64 {
        match self.side {
            Side::Left => left_density(g),
            Side::Right => right_density(g),
        }
    }
}

/// `e^{−2 Re tr(tJ)}`.
pub fn left_density(g: &GroupElement) -> f64 {
    (-2.0 * (g.t() * g.group().aleph().trace()).re).exp()
}

pub fn right_density(_g: &GroupElement) -> f64 {
    1.0
}

/// `Δ = dμ_L / dμ_R`.
pub fn modular(g: &GroupElement) -> f64 {
    left_density(g) / right_density(g)
}

/// Real Jacobian determinant of `x ↦ g·x`, independent of `x`; equals
/// `e^{2 Re tr(sJ)}` for `g = [u, s]`.
pub fn real_jacobian_left(g: &GroupElement) -> f64 {
    real_jacobian_det(&g.left_translation_jacobian())
}

/// Real Jacobian determinant of `x ↦ x·g` at `x`.
pub fn real_jacobian_right(g: &GroupElement, x: &GroupElement) -> Result<f64> {
    Ok(real_jacobian_det(&g.right_translation_jacobian(x)?))
}

/// `|ρ_L(g·x)·det 𝒥_ℝ(Φ_g) − ρ_L(x)|`.
pub fn check_left_invariance(g: &GroupElement, x: &GroupElement) -> Result<f64> {
    let gx = g.multiply(x)?;
    Ok((left_density(&gx) * real_jacobian_left(g) - left_density(x)).abs())
}

/// `|ρ_R(x·g)·det 𝒥_ℝ(Ψ_g)(x) − ρ_R(x)|`.
pub fn check_right_invariance(g: &GroupElement, x: &GroupElement) -> Result<f64> {
    let xg = x.multiply(g)?;
    Ok((right_density(&xg) * real_jacobian_right(g, x)? - right_density(x)).abs())
}

/// Axis-aligned box in real coordinates
/// `(Re v₁, Im v₁, …, Re v_d, Im v_d, Re t, Im t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordBox {
    pub ranges: Vec<(f64, f64)>,
}

impl CoordBox {
    pub fn new(ranges: Vec<(f64, f64)>) -> Self {
        CoordBox { ranges }
    }

    /// `[0,1]^{2(d+1)}`.
    pub fn unit(d: usize) -> Self {
        CoordBox {
            ranges: vec![(0.0, 1.0); 2 * (d + 1)],
        }
    }

    pub fn volume(&self) -> f64 {
        self.ranges.iter().map(|(lo, hi)| hi - lo).product()
    }
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

/// Uniform Monte Carlo estimate of `∫_box f dμ`, deterministic for a fixed seed.
pub fn mc_integrate(
    f: impl Fn(&GroupElement) -> f64,
    region: &CoordBox,
    density: &HaarDensity,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    let group = &density.descriptor;
    let expected = 2 * group.dim();
    if region.ranges.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: region.ranges.len(),
        });
    }
    if let Some(axis) = region
        .ranges
        .iter()
        .position(|(lo, hi)| hi.partial_cmp(lo) != Some(std::cmp::Ordering::Greater))
    {
        return Err(Error::EmptyBox { axis });
    }
    if n == 0 {
        return Err(Error::Usage(
            "mc_integrate needs at least one sample".into(),
        ));
    }
    let mut rng = sampling::rng(seed);
    let d = group.d();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut coords = vec![0.0; expected];
    for _ in 0..n {
        for (x, &(lo, hi)) in coords.iter_mut().zip(&region.ranges) {
            *x = rng.random_range(lo..hi);
        }
        let v = crate::CVector::from_fn(d, |i, _| crate::c(coords[2 * i], coords[2 * i + 1]));
        let t = crate::c(coords[2 * d], coords[2 * d + 1]);
        let x = group.element(v, t)?;
        let y = f(&x) * density.at(&x);
        sum += y;
        sum_sq += y * y;
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = if n > 1 {
        ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0)
    } else {
        0.0
    };
    let vol = region.volume();
    Ok(McEstimate {
        estimate: vol * mean,
        std_error: vol * (var / nf).sqrt(),
    })
}
