//! The simply connected group `G = ℂ^d ⋊ ℂ` attached to a multiplicity function.
//!
//! Elements are pairs `[v, t]` representing the matrix
//!
//! ```text
//! ⎡ 1   0       0 ⎤
//! ⎢ v   e^{tJ}  0 ⎥
//! ⎣ t   0       1 ⎦
//! ```
//!
//! so that `[u,s][v,t] = [u + e^{sJ} v, s + t]`. Algebra elements `(v, t)` live
//! in `V ⋊ ℂe₀` with `[(u,s),(v,t)] = (sJv − tJu, 0)`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::{complex_from_json, complex_to_json, vector_from_json, vector_to_json};
use crate::linalg::{max_abs, max_abs_vec, unipotent_last_column};
use crate::multiplicity::{JordanMatrix, MultiplicityFunction};
use crate::{c, CMatrix, CVector, C64};

/// Denominator bound for the continued-fraction rationality test.
pub const RATIONAL_MAX_DENOMINATOR: i128 = 1_000_000;
/// Tolerance of the continued-fraction rationality test.
pub const RATIONAL_TOL: f64 = 1e-9;

/// A group `G`: its multiplicity function, Jordan matrix and dimension `d = dim V`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupDescriptor {
    aleph: MultiplicityFunction,
    jordan: JordanMatrix,
    d: usize,
}

impl GroupDescriptor {
    pub fn new(aleph: MultiplicityFunction) -> Arc<Self> {
        let jordan = aleph.build_jordan();
        let d = aleph.dim_v();
        Arc::new(GroupDescriptor { aleph, jordan, d })
    }

    pub fn aleph(&self) -> &MultiplicityFunction {
        &self.aleph
    }

    pub fn jordan(&self) -> &JordanMatrix {
        &self.jordan
    }

    /// `J(ℵ)` as a dense matrix.
    pub fn j(&self) -> &CMatrix {
        self.jordan.entries()
    }

    /// `d = dim V`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Complex dimension of the group, `d + 1`.
    pub fn dim(&self) -> usize {
        self.d + 1
    }

    pub fn is_abelian(&self) -> bool {
        self.aleph.is_abelian()
    }

    pub fn identity(self: &Arc<Self>) -> GroupElement {
        GroupElement {
            v: CVector::zeros(self.d),
            t: c(0.0, 0.0),
            group: Arc::clone(self),
        }
    }

    pub fn element(self: &Arc<Self>, v: CVector, t: C64) -> Result<GroupElement> {
        if v.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: v.len(),
            });
        }
        if !(v.iter().all(|z| z.re.is_finite() && z.im.is_finite())
            && t.re.is_finite()
            && t.im.is_finite())
        {
            return Err(Error::NonFinite("group element"));
        }
        Ok(GroupElement {
            v,
            t,
            group: Arc::clone(self),
        })
    }

    /// Parses `{"v":[[re,im],...],"t":[re,im]}`.
    pub fn element_from_json(self: &Arc<Self>, value: &Value) -> Result<GroupElement> {
        let (v, t) = parse_pair(value)?;
        self.element(v, t)
    }

    pub fn algebra_from_json(&self, value: &Value) -> Result<AlgebraElement> {
        let (v, t) = parse_pair(value)?;
        if v.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: v.len(),
            });
        }
        Ok(AlgebraElement { v, t })
    }

    /// `(0, 1)`, the generator complementing the Abelian ideal.
    pub fn e0(&self) -> AlgebraElement {
        AlgebraElement {
            v: CVector::zeros(self.d),
            t: c(1.0, 0.0),
        }
    }

    fn check_algebra(&self, x: &AlgebraElement) -> Result<()> {
        if x.v.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: x.v.len(),
            });
        }
        Ok(())
    }

    /// `exp((v,t)) = [v,t]`, valid on the Abelian subalgebra `ker J ⊕ ℂ`.
    pub fn exp_restricted(self: &Arc<Self>, x: &AlgebraElement, tol: f64) -> Result<GroupElement> {
        self.check_algebra(x)?;
        let residual = max_abs_vec(&(self.j() * &x.v));
        if residual > tol {
            return Err(Error::NotInKernel { residual });
        }
        self.element(x.v.clone(), x.t)
    }

    /// `(d+2)×(d+2)` matrix of an algebra element: the derivative at the identity
    /// of the group representation.
    pub fn algebra_matrix(&self, x: &AlgebraElement) -> CMatrix {
        let d = self.d;
        let mut m = CMatrix::zeros(d + 2, d + 2);
        m.view_mut((1, 0), (d, 1)).copy_from(&x.v);
        m.view_mut((1, 1), (d, d)).copy_from(&(self.j() * x.t));
        m[(d + 1, 0)] = x.t;
        m
    }

    /// Exponential map on the whole algebra, through a dense matrix exponential
    /// of [`algebra_matrix`](Self::algebra_matrix).
    pub fn exp_full(self: &Arc<Self>, x: &AlgebraElement) -> Result<GroupElement> {
        self.check_algebra(x)?;
        let e = self.algebra_matrix(x).exp();
        let v = e.view((1, 0), (self.d, 1)).clone_owned();
        let t = e[(self.d + 1, 0)];
        self.element(CVector::from_column_slice(v.as_slice()), t)
    }

    /// `[(u,s),(v,t)] = (sJv − tJu, 0)`.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_algebra(x)?;
        self.check_algebra(y)?;
        let v = self.j() * (&y.v * x.t - &x.v * y.t);
        Ok(AlgebraElement { v, t: c(0.0, 0.0) })
    }

    /// Basis of `ker J`: the first coordinate of every block with `μ = 0`.
    pub fn kernel_basis(&self) -> Vec<CVector> {
        let mut basis = Vec::new();
        let mut offset = 0;
        for &(mu, n) in self.jordan.layout() {
            if mu == c(0.0, 0.0) {
                let mut e = CVector::zeros(self.d);
                e[offset] = c(1.0, 0.0);
                basis.push(e);
            }
            offset += n;
        }
        basis
    }

    /// Center of `G`: `{[u,s] : u ∈ ker J, e^{sJ} = 1}`.
    ///
    /// `tol` bounds `‖e^{s₀J} − 1‖` for an accepted cyclic generator `s₀`.
    pub fn center(&self, tol: f64) -> CenterDescription {
        let kernel_basis = self.kernel_basis();
        let (torus_lattice, confidence) = self.torus_lattice(tol);
        CenterDescription {
            kernel_basis,
            torus_lattice,
            confidence,
        }
    }

    fn torus_lattice(&self, tol: f64) -> (TorusLattice, Confidence) {
        if self.is_abelian() {
            return (TorusLattice::Full, Confidence::Exact);
        }
        // e^{sJ} of a block with n ≥ 2 has superdiagonal s·e^{sμ}, forcing s = 0
        if self.aleph.blocks().iter().any(|b| b.size >= 2) {
            return (TorusLattice::Trivial, Confidence::Exact);
        }
        let mut eigenvalues: Vec<C64> = Vec::new();
        for b in self.aleph.blocks() {
            if b.mu != c(0.0, 0.0) && !eigenvalues.contains(&b.mu) {
                eigenvalues.push(b.mu);
            }
        }
        let two_pi_i = c(0.0, 2.0 * PI);
        // sμ_k ∈ 2πiℤ  ⇔  s ∈ w_k ℤ with w_k = 2πi/μ_k; intersect the lattices w_k ℤ
        let base = two_pi_i / eigenvalues[0];
        let mut confidence = Confidence::Exact;
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for &mu in &eigenvalues[1..] {
            confidence = Confidence::ToleranceBased;
            let ratio = eigenvalues[0] / mu;
            if ratio.im.abs() > RATIONAL_TOL * ratio.norm().max(1.0) {
                return (TorusLattice::Trivial, confidence);
            }
            let Some((p, q)) = rational_approx(ratio.re, RATIONAL_MAX_DENOMINATOR, RATIONAL_TOL)
            else {
                return (TorusLattice::Trivial, confidence);
            };
            let Some(n) = lcm(num, p.abs()) else {
                return (TorusLattice::Trivial, confidence);
            };
            num = n;
            den = gcd(den, q);
        }
        let mut s0 = base * (num as f64 / den as f64);
        if s0.re < 0.0 || (s0.re == 0.0 && s0.im < 0.0) {
            s0 = -s0;
        }
        let residual = max_abs(&(self.jordan.exp(s0) - CMatrix::identity(self.d, self.d)));
        if residual > tol {
            return (TorusLattice::Trivial, Confidence::ToleranceBased);
        }
        (TorusLattice::Cyclic(s0), confidence)
    }
}

fn parse_pair(value: &Value) -> Result<(CVector, C64)> {
    let v = vector_from_json(
        value
            .get("v")
            .ok_or_else(|| Error::spec("v", "missing field"))?,
        "v",
    )?;
    let t = complex_from_json(
        value
            .get("t")
            .ok_or_else(|| Error::spec("t", "missing field"))?,
        "t",
    )?;
    Ok((v, t))
}

/// Best rational approximation `p/q` (with `q ≤ max_den`) of `x` within
/// `tol · max(1, |x|)`, from the continued-fraction convergents.
pub fn rational_approx(x: f64, max_den: i128, tol: f64) -> Option<(i128, i128)> {
    if !x.is_finite() {
        return None;
    }
    let bound = tol * x.abs().max(1.0);
    let (mut p_prev, mut q_prev) = (1i128, 0i128);
    let (mut p, mut q) = (x.floor() as i128, 1i128);
    let mut rem = x - x.floor();
    loop {
        if (x - p as f64 / q as f64).abs() <= bound {
            let g = gcd(p.abs(), q).max(1);
            return Some((p / g, q / g));
        }
        if rem.abs() < f64::EPSILON {
            return None;
        }
        let inv = 1.0 / rem;
        let a = inv.floor();
        rem = inv - a;
        let a = a as i128;
        let p_next = a.checked_mul(p)?.checked_add(p_prev)?;
        let q_next = a.checked_mul(q)?.checked_add(q_prev)?;
        if q_next > max_den {
            return None;
        }
        (p_prev, q_prev, p, q) = (p, q, p_next, q_next);
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn lcm(a: i128, b: i128) -> Option<i128> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b).map(i128::abs)
}

/// `[v, t] ∈ G`.
#[derive(Clone)]
pub struct GroupElement {
    v: CVector,
    t: C64,
    group: Arc<GroupDescriptor>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupElement")
            .field("v", &self.v.as_slice())
            .field("t", &self.t)
            .finish()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.v == other.v && self.t == other.t
    }
}

pub(crate) fn same_group(a: &Arc<GroupDescriptor>, b: &Arc<GroupDescriptor>) -> bool {
    Arc::ptr_eq(a, b) || a.aleph == b.aleph
}

impl GroupElement {
    pub fn v(&self) -> &CVector {
        &self.v
    }

    pub fn t(&self) -> C64 {
        self.t
    }

    pub fn group(&self) -> &Arc<GroupDescriptor> {
        &self.group
    }

    pub(crate) fn check_same(&self, other: &GroupElement) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    /// `[u,s][v,t] = [u + e^{sJ} v, s + t]`.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same(other)?;
        let v = &self.v + self.group.jordan.exp(self.t) * &other.v;
        Ok(GroupElement {
            v,
            t: self.t + other.t,
            group: Arc::clone(&self.group),
        })
    }

    /// `[v,t]⁻¹ = [−e^{−tJ} v, −t]`.
    pub fn inverse(&self) -> GroupElement {
        let v = -(self.group.jordan.exp(-self.t) * &self.v);
        GroupElement {
            v,
            t: -self.t,
            group: Arc::clone(&self.group),
        }
    }

    /// The `(d+2)×(d+2)` matrix `[v,t]`.
    pub fn to_matrix(&self) -> CMatrix {
        let d = self.group.d;
        let mut m = CMatrix::zeros(d + 2, d + 2);
        m[(0, 0)] = c(1.0, 0.0);
        m.view_mut((1, 0), (d, 1)).copy_from(&self.v);
        m.view_mut((1, 1), (d, d))
            .copy_from(&self.group.jordan.exp(self.t));
        m[(d + 1, 0)] = self.t;
        m[(d + 1, d + 1)] = c(1.0, 0.0);
        m
    }

    /// Complex Jacobian `e^{sJ} ⊕ 1` of left translation `x ↦ self·x`; the same
    /// at every point.
    pub fn left_translation_jacobian(&self) -> CMatrix {
        crate::linalg::plus_one(&self.group.jordan.exp(self.t))
    }

    /// Complex Jacobian `[[1, J e^{tJ} u], [0, 1]]` of right translation
    /// `x ↦ x·self` at `x = [v, t]`, where `u` is the `v`-part of `self`.
    pub fn right_translation_jacobian(&self, at: &GroupElement) -> Result<CMatrix> {
        self.check_same(at)?;
        let col = self.group.jordan.exp_derivative(at.t) * &self.v;
        Ok(unipotent_last_column(&col))
    }

    /// `(‖Jv‖, ‖e^{tJ} − 1‖)`, both as largest entry moduli.
    pub fn central_residuals(&self) -> (f64, f64) {
        let d = self.group.d;
        let kernel = max_abs_vec(&(self.group.j() * &self.v));
        let torus = max_abs(&(self.group.jordan.exp(self.t) - CMatrix::identity(d, d)));
        (kernel, torus)
    }

    pub fn is_central(&self, tol: f64) -> bool {
        let (kernel, torus) = self.central_residuals();
        kernel <= tol && torus <= tol
    }

    /// Largest coordinate difference to `other`.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        max_abs_vec(&(&self.v - &other.v)).max((self.t - other.t).norm())
    }

    pub fn to_json(&self) -> Value {
        json!({ "v": vector_to_json(self.v.iter()), "t": complex_to_json(self.t) })
    }
}

/// `(v, t) ∈ V ⋊ ℂe₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub v: CVector,
    pub t: C64,
}

impl AlgebraElement {
    pub fn new(v: CVector, t: C64) -> Self {
        AlgebraElement { v, t }
    }

    pub fn zero(d: usize) -> Self {
        AlgebraElement {
            v: CVector::zeros(d),
            t: c(0.0, 0.0),
        }
    }

    pub fn scale(&self, k: C64) -> Self {
        AlgebraElement {
            v: &self.v * k,
            t: self.t * k,
        }
    }

    /// Row `(vᵀ, t)` of length `d + 1`.
    pub fn to_row(&self) -> crate::CRow {
        let d = self.v.len();
        crate::CRow::from_fn(d + 1, |_, j| if j < d { self.v[j] } else { self.t })
    }

    pub fn from_row(row: &crate::CRow) -> Self {
        let n = row.len();
        AlgebraElement {
            v: CVector::from_fn(n - 1, |i, _| row[i]),
            t: row[n - 1],
        }
    }

    pub fn norm(&self) -> f64 {
        max_abs_vec(&self.v).max(self.t.norm())
    }

    pub fn to_json(&self) -> Value {
        json!({ "v": vector_to_json(self.v.iter()), "t": complex_to_json(self.t) })
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            v: &self.v + &rhs.v,
            t: self.t + rhs.t,
        }
    }
}

/// Lattice of `s` with `e^{sJ} = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TorusLattice {
    /// Only `s = 0`.
    Trivial,
    /// `s₀ ℤ` for the given generator `s₀`.
    Cyclic(C64),
    /// All of `ℂ` (`J = 0`).
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confidence {
    Exact,
    /// Depends on the numerical rationality test of eigenvalue ratios.
    ToleranceBased,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenterDescription {
    pub kernel_basis: Vec<CVector>,
    pub torus_lattice: TorusLattice,
    pub confidence: Confidence,
}

impl CenterDescription {
    pub fn to_json(&self) -> Value {
        let torus = match self.torus_lattice {
            TorusLattice::Trivial => json!({ "kind": "trivial" }),
            TorusLattice::Cyclic(s0) => {
                json!({ "kind": "cyclic", "generator": complex_to_json(s0) })
            }
            TorusLattice::Full => json!({ "kind": "full" }),
        };
        json!({
            "kernel_basis": self.kernel_basis.iter().map(|u| vector_to_json(u.iter())).collect::<Vec<_>>(),
            "torus_lattice": torus,
            "confidence": match self.confidence {
                Confidence::Exact => "exact",
                Confidence::ToleranceBased => "tolerance-based",
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::MultiplicityFunction;

    fn group(triples: &[(C64, usize, usize)]) -> Arc<GroupDescriptor> {
        GroupDescriptor::new(MultiplicityFunction::from_triples(triples).unwrap())
    }

    fn vec(entries: &[C64]) -> CVector {
        CVector::from_column_slice(entries)
    }

    fn r(x: f64) -> C64 {
        c(x, 0.0)
    }

    #[test]
    fn multiply_examples() {
        let g = group(&[(r(1.0), 1, 1)]);
        let a = g.element(vec(&[r(0.0)]), r(2f64.ln())).unwrap();
        let b = g.element(vec(&[r(1.0)]), r(0.0)).unwrap();
        let p = a.multiply(&b).unwrap();
        assert!((p.v()[0] - r(2.0)).norm() < 1e-15);
        assert!((p.t() - r(2f64.ln())).norm() < 1e-15);

        let h = group(&[(r(0.0), 2, 1)]);
        let a = h.element(vec(&[r(0.0), r(0.0)]), r(1.0)).unwrap();
        let b = h.element(vec(&[r(0.0), r(1.0)]), r(0.0)).unwrap();
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.v(), &vec(&[r(1.0), r(1.0)]));
        assert_eq!(p.t(), r(1.0));
        assert_eq!(a.multiply(&h.identity()).unwrap(), a);
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let g = group(&[(r(1.0), 1, 1)]);
        let h = group(&[(r(2.0), 1, 1)]);
        let err = g.identity().multiply(&h.identity()).unwrap_err();
        assert!(matches!(err, Error::DescriptorMismatch));
        // equal data in separate allocations is the same group
        let g2 = group(&[(r(1.0), 1, 1)]);
        assert!(g.identity().multiply(&g2.identity()).is_ok());
    }

    #[test]
    fn inverse_examples() {
        let g = group(&[(r(1.0), 1, 1)]);
        let x = g.element(vec(&[r(1.0)]), r(2f64.ln())).unwrap();
        let inv = x.inverse();
        assert!((inv.v()[0] - r(-0.5)).norm() < 1e-15);
        assert_eq!(inv.t(), r(-(2f64.ln())));
        assert!(x.multiply(&inv).unwrap().distance(&g.identity()) < 1e-15);
        assert_eq!(g.identity().inverse(), g.identity());
    }

    #[test]
    fn matrix_layout() {
        let g = group(&[(r(1.0), 1, 1)]);
        assert_eq!(g.identity().to_matrix(), CMatrix::identity(3, 3));
        let m = g.element(vec(&[r(1.0)]), r(0.0)).unwrap().to_matrix();
        let expected = CMatrix::from_row_slice(
            3,
            3,
            &[
                r(1.0),
                r(0.0),
                r(0.0),
                r(1.0),
                r(1.0),
                r(0.0),
                r(0.0),
                r(0.0),
                r(1.0),
            ],
        );
        assert_eq!(m, expected);
        let m = g.element(vec(&[r(0.0)]), r(2f64.ln())).unwrap().to_matrix();
        assert!((m[(1, 1)] - r(2.0)).norm() < 1e-15);
        assert_eq!(m[(2, 0)], r(2f64.ln()));
    }

    #[test]
    fn restricted_exponential() {
        let g = group(&[(r(0.0), 2, 1)]);
        let x = AlgebraElement::new(vec(&[r(1.0), r(0.0)]), r(5.0));
        let e = g.exp_restricted(&x, 1e-10).unwrap();
        assert_eq!(e.v(), &x.v);
        assert_eq!(e.t(), r(5.0));
        let bad = AlgebraElement::new(vec(&[r(0.0), r(1.0)]), r(0.0));
        assert!(matches!(
            g.exp_restricted(&bad, 1e-10),
            Err(Error::NotInKernel { .. })
        ));
        let zero_v = AlgebraElement::new(vec(&[r(0.0), r(0.0)]), c(0.3, -2.0));
        assert_eq!(g.exp_restricted(&zero_v, 1e-10).unwrap().t(), c(0.3, -2.0));
    }

    #[test]
    fn full_exponential_matches_restricted_on_kernel() {
        let g = group(&[(r(0.0), 2, 1)]);
        let x = AlgebraElement::new(vec(&[r(1.0), r(0.0)]), r(5.0));
        let e = g.exp_full(&x).unwrap();
        assert!(e.distance(&g.exp_restricted(&x, 1e-10).unwrap()) < 1e-10);
        let zero = g.exp_full(&AlgebraElement::zero(2)).unwrap();
        assert!(zero.distance(&g.identity()) < 1e-15);
        let pure_v = AlgebraElement::new(vec(&[c(0.5, 1.0), r(-2.0)]), r(0.0));
        let e = g.exp_full(&pure_v).unwrap();
        assert!(max_abs_vec(&(e.v() - &pure_v.v)) < 1e-12);
    }

    #[test]
    fn bracket_examples() {
        let g = group(&[(r(1.0), 1, 1)]);
        let e0 = g.e0();
        let x = AlgebraElement::new(vec(&[r(1.0)]), r(0.0));
        assert_eq!(
            g.bracket(&e0, &x).unwrap(),
            AlgebraElement::new(vec(&[r(1.0)]), r(0.0))
        );
        assert_eq!(g.bracket(&x, &x).unwrap().norm(), 0.0);
        let y = AlgebraElement::new(vec(&[r(-3.0)]), r(0.0));
        assert_eq!(g.bracket(&x, &y).unwrap().norm(), 0.0);
    }

    #[test]
    fn center_examples() {
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1)]);
        let z = g.center(1e-10);
        assert!(z.kernel_basis.is_empty());
        match z.torus_lattice {
            TorusLattice::Cyclic(s0) => assert!((s0 - r(1.0)).norm() < 1e-10),
            other => panic!("expected cyclic, got {other:?}"),
        }
        assert_eq!(z.confidence, Confidence::Exact);

        let g = group(&[(r(0.0), 2, 1)]);
        let z = g.center(1e-10);
        assert_eq!(z.kernel_basis, vec![vec(&[r(1.0), r(0.0)])]);
        assert_eq!(z.torus_lattice, TorusLattice::Trivial);

        let g = group(&[(r(0.0), 1, 2)]);
        let z = g.center(1e-10);
        assert_eq!(z.kernel_basis.len(), 2);
        assert_eq!(z.torus_lattice, TorusLattice::Full);
    }

    #[test]
    fn center_commensurable_eigenvalues() {
        // e^{sμ} = 1 for μ = 2πi and μ = 3πi requires s ∈ ℤ ∩ (2/3)ℤ = 2ℤ
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1), (c(0.0, 3.0 * PI), 1, 1)]);
        let z = g.center(1e-10);
        match z.torus_lattice {
            TorusLattice::Cyclic(s0) => assert!((s0 - r(2.0)).norm() < 1e-10, "{s0}"),
            other => panic!("expected cyclic, got {other:?}"),
        }
        assert_eq!(z.confidence, Confidence::ToleranceBased);

        // 2πi and 2√2 πi are incommensurable
        let g = group(&[
            (c(0.0, 2.0 * PI), 1, 1),
            (c(0.0, 2.0 * 2f64.sqrt() * PI), 1, 1),
        ]);
        let z = g.center(1e-10);
        assert_eq!(z.torus_lattice, TorusLattice::Trivial);
        assert_eq!(z.confidence, Confidence::ToleranceBased);

        // real eigenvalue: e^{s} = 1 iff s ∈ 2πiℤ
        let g = group(&[(r(1.0), 1, 1), (r(0.0), 1, 1)]);
        match g.center(1e-10).torus_lattice {
            TorusLattice::Cyclic(s0) => assert!((s0 - c(0.0, 2.0 * PI)).norm() < 1e-12),
            other => panic!("expected cyclic, got {other:?}"),
        }
    }

    #[test]
    fn is_central_examples() {
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1)]);
        assert!(g.element(vec(&[r(0.0)]), r(1.0)).unwrap().is_central(1e-10));
        assert!(!g.element(vec(&[r(0.0)]), r(0.5)).unwrap().is_central(1e-10));
        assert!(g.identity().is_central(1e-10));
    }

    #[test]
    fn rational_approximation() {
        assert_eq!(rational_approx(0.75, 1_000_000, 1e-9), Some((3, 4)));
        assert_eq!(rational_approx(-2.5, 1_000_000, 1e-9), Some((-5, 2)));
        assert_eq!(rational_approx(3.0, 1_000_000, 1e-9), Some((3, 1)));
        assert_eq!(rational_approx(2f64.sqrt(), 1_000, 1e-9), None);
        assert_eq!(rational_approx(PI, 1_000, 1e-9), None);
        // the 10⁶ bound admits convergents of irrationals; the e^{s₀J} = 1 check
        // in `center` is what rejects them
        assert_eq!(
            rational_approx(2f64.sqrt(), 1_000_000, 1e-9),
            Some((47321, 33461))
        );
    }

    #[test]
    fn element_json_round_trip() {
        let g = group(&[(r(1.0), 2, 1)]);
        let x = g
            .element(vec(&[c(0.1, -0.2), c(1e-17, 3.5)]), c(-0.7, 0.3))
            .unwrap();
        let text = x.to_json().to_string();
        let back = g
            .element_from_json(&serde_json::from_str(&text).unwrap())
            .unwrap();
        assert_eq!(back, x);
        let err = g
            .element_from_json(&json!({"v": [[0, 0]], "t": [0, 0]}))
            .unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        ));
    }
}
