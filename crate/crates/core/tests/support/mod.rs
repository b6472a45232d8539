//! Independent reference computations. Nothing here calls the closed-form
//! exponential, the group law, or the frame formulas of the library.

#![allow(dead_code)]

use almost_abelian::{c, CMatrix, CVector, MultiplicityFunction, C64};

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `J(ℵ)` assembled block by block from the raw triples, in the given order.
pub fn jordan(aleph: &MultiplicityFunction) -> CMatrix {
    let d = aleph.dim_v();
    let mut j = CMatrix::zeros(d, d);
    let mut at = 0;
    for b in aleph.blocks() {
        for _ in 0..b.mult {
            for k in 0..b.size {
                j[(at + k, at + k)] = b.mu;
                if k + 1 < b.size {
                    j[(at + k, at + k + 1)] = c(1.0, 0.0);
                }
            }
            at += b.size;
        }
    }
    j
}

/// Dense exponential by scaling and squaring of a truncated Taylor series.
pub fn expm(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    let norm: f64 = a.iter().map(|z| z.norm()).sum();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a * c(scale, 0.0);
    let mut term = CMatrix::identity(n, n);
    let mut sum = CMatrix::identity(n, n);
    for k in 1..=24 {
        term = &term * &x * c(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// The `(d+2)×(d+2)` matrix of `[v, t]`, from `expm`.
pub fn group_matrix(j: &CMatrix, v: &CVector, t: C64) -> CMatrix {
    let d = j.nrows();
    let mut m = CMatrix::zeros(d + 2, d + 2);
    m[(0, 0)] = c(1.0, 0.0);
    m[(d + 1, d + 1)] = c(1.0, 0.0);
    m[(d + 1, 0)] = t;
    for i in 0..d {
        m[(i + 1, 0)] = v[i];
    }
    let e = expm(&(j * t));
    m.view_mut((1, 1), (d, d)).copy_from(&e);
    m
}

/// Reads `(v, t)` back from a group matrix.
pub fn decode(m: &CMatrix) -> (CVector, C64) {
    let d = m.nrows() - 2;
    (CVector::from_fn(d, |i, _| m[(i + 1, 0)]), m[(d + 1, 0)])
}

/// Coordinates `z = (v, t)` as one vector.
pub fn coords(v: &CVector, t: C64) -> CVector {
    let d = v.len();
    CVector::from_fn(d + 1, |i, _| if i < d { v[i] } else { t })
}

/// Product of coordinate vectors via the matrix representation.
pub fn product(j: &CMatrix, a: &CVector, b: &CVector) -> CVector {
    let d = j.nrows();
    let split = |z: &CVector| (CVector::from_fn(d, |i, _| z[i]), z[d]);
    let (av, at) = split(a);
    let (bv, bt) = split(b);
    let (v, t) = decode(&(group_matrix(j, &av, at) * group_matrix(j, &bv, bt)));
    coords(&v, t)
}

/// Complex Jacobian of a holomorphic map `ℂ^n → ℂ^n` by central differences
/// along the real axis of each coordinate; column `k` is `∂f/∂z^k`.
pub fn fd_jacobian(f: impl Fn(&CVector) -> CVector, z: &CVector, step: f64) -> CMatrix {
    let n = z.len();
    let mut out = CMatrix::zeros(n, n);
    for k in 0..n {
        let mut plus = z.clone();
        let mut minus = z.clone();
        plus[k] += c(step, 0.0);
        minus[k] -= c(step, 0.0);
        let col = (f(&plus) - f(&minus)) * c(0.5 / step, 0.0);
        out.set_column(k, &col);
    }
    out
}

/// Exact Jacobian of left translation by `[u, s]`: block `e^{sJ}` and 1.
pub fn left_translation_jacobian(j: &CMatrix, s: C64) -> CMatrix {
    let d = j.nrows();
    let mut m = CMatrix::identity(d + 1, d + 1);
    m.view_mut((0, 0), (d, d)).copy_from(&expm(&(j * s)));
    m
}

/// Exact Jacobian of right translation by `[u, s]` at `x = [v, t]`:
/// `∂/∂t (e^{tJ} u) = J e^{tJ} u` in the last column.
pub fn right_translation_jacobian(j: &CMatrix, u: &CVector, t: C64) -> CMatrix {
    let d = j.nrows();
    let mut m = CMatrix::identity(d + 1, d + 1);
    let col = j * expm(&(j * t)) * u;
    m.view_mut((0, d), (d, 1)).copy_from(&col);
    m
}

/// `|det_ℂ A|²`, the real Jacobian determinant of a holomorphic map.
pub fn real_det(a: &CMatrix) -> f64 {
    a.clone().determinant().norm_sqr()
}

/// Left Haar density: `1 / |det d(L_x)_e|²`.
pub fn left_density(j: &CMatrix, t: C64) -> f64 {
    1.0 / real_det(&left_translation_jacobian(j, t))
}

/// Algebra matrix of `X = (u, s)`: the derivative at 0 of `τ ↦ [τu, τs]`-type
/// one-parameter subgroups, `[[0,0,0],[u,sJ,0],[s,0,0]]`.
pub fn algebra_matrix(j: &CMatrix, x: &CVector) -> CMatrix {
    let d = j.nrows();
    let mut m = CMatrix::zeros(d + 2, d + 2);
    for i in 0..d {
        m[(i + 1, 0)] = x[i];
    }
    m[(d + 1, 0)] = x[d];
    m.view_mut((1, 1), (d, d)).copy_from(&(j * x[d]));
    m
}

/// `d/dτ|₀ exp(τX)·p` (`left = true`) or `p·exp(τX)` by central differences.
pub fn fd_generator(j: &CMatrix, x: &CVector, p: &CVector, left: bool, step: f64) -> CVector {
    let d = j.nrows();
    let pm = group_matrix(j, &CVector::from_fn(d, |i, _| p[i]), p[d]);
    let at = |tau: f64| {
        let e = expm(&(algebra_matrix(j, x) * c(tau, 0.0)));
        let m = if left { &e * &pm } else { &pm * &e };
        let (v, t) = decode(&m);
        coords(&v, t)
    };
    (at(step) - at(-step)) * c(0.5 / step, 0.0)
}
