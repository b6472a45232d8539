//! Central quotients `G = G̃/Γ` of the simply connected group.
//!
//! `Γ` is carried by generators only. Centrality is verified elementwise via
//! `u ∈ ker J`, `e^{sJ} = 1`; discreteness is not checked.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frames::{frame_at, FrameKind};
use crate::group::{same_group, GroupDescriptor, GroupElement};
use crate::hermitian::{is_kahler, HermitianForm, KahlerVerdict, Provenance};
use crate::linalg::max_abs;
use crate::CMatrix;

/// Generators must commute to this accuracy.
pub const COMMUTATOR_TOL: f64 = 1e-12;

/// Generators of a central subgroup `Γ ⊆ G̃` that passed [`verify_central`].
#[derive(Debug, Clone)]
pub struct DiscreteSubgroup {
    generators: Vec<GroupElement>,
    descriptor: Arc<GroupDescriptor>,
}

impl DiscreteSubgroup {
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn descriptor(&self) -> &Arc<GroupDescriptor> {
        &self.descriptor
    }

    /// `{"generators": [{"v": .., "t": ..}, ..]}`.
    pub fn to_json(&self) -> Value {
        json!({ "generators": self.generators.iter().map(GroupElement::to_json).collect::<Vec<_>>() })
    }
}

/// Parses `{"generators": [element, ..]}` without validating centrality.
pub fn generators_from_json(
    descriptor: &Arc<GroupDescriptor>,
    value: &Value,
) -> Result<Vec<GroupElement>> {
    let list = value
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::spec("generators", "expected an array of elements"))?;
    list.iter()
        .enumerate()
        .map(|(i, g)| {
            descriptor.element_from_json(g).map_err(|e| match e {
                Error::Spec { path, message } => Error::Spec {
                    path: format!("generators[{i}].{path}"),
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Accepts the candidates when each is central within `tol` and all pairs
/// commute; otherwise reports the first failure.
pub fn verify_central(
    descriptor: &Arc<GroupDescriptor>,
    candidates: &[GroupElement],
    tol: f64,
) -> Result<DiscreteSubgroup> {
    for (index, g) in candidates.iter().enumerate() {
        if !same_group(descriptor, g.group()) {
            return Err(Error::DescriptorMismatch);
        }
        let (kernel_residual, torus_residual) = g.central_residuals();
        if !(kernel_residual <= tol && torus_residual <= tol) {
            return Err(Error::NonCentral {
                index,
                kernel_residual,
                torus_residual,
            });
        }
    }
    for (i, a) in candidates.iter().enumerate() {
        for (j, b) in candidates.iter().enumerate().skip(i + 1) {
            let residual = a.multiply(b)?.distance(&b.multiply(a)?);
            if residual > COMMUTATOR_TOL {
                return Err(Error::NonCommuting {
                    first: i,
                    second: j,
                    residual,
                });
            }
        }
    }
    Ok(DiscreteSubgroup {
        generators: candidates.to_vec(),
        descriptor: Arc::clone(descriptor),
    })
}

/// Coordinate components `h_{ab}(x) = (Cᵀ ĥ C̄)_{ab}` in the coframe `C` of the
/// metric's side.
pub fn coordinate_components(h: &HermitianForm, x: &GroupElement) -> CMatrix {
    let coframe = frame_at(FrameKind::coframe(h.side()), x);
    coframe.transpose() * h.coeffs() * coframe.map(|z| z.conj())
}

/// Largest `|dΨ_γᵀ h(x·γ) conj(dΨ_γ) − h(x)|` over generators and points, where
/// `dΨ_γ` is the differential of right translation by `γ` at `x`.
pub fn check_right_gamma_invariance(
    h: &HermitianForm,
    gamma: &DiscreteSubgroup,
    points: &[GroupElement],
) -> Result<f64> {
    if h.dim() != gamma.descriptor.dim() {
        return Err(Error::DimensionMismatch {
            expected: gamma.descriptor.dim(),
            found: h.dim(),
        });
    }
    let mut worst = 0.0f64;
    for g in &gamma.generators {
        for x in points {
            let jac = g.right_translation_jacobian(x)?;
            let moved = coordinate_components(h, &x.multiply(g)?);
            let pulled = jac.transpose() * moved * jac.map(|z| z.conj());
            worst = worst.max(max_abs(&(pulled - coordinate_components(h, x))));
        }
    }
    Ok(worst)
}

/// `q_Γ^* h`: the quotient map is a local biholomorphism intertwining the
/// invariant frames, so the constant coefficients are unchanged.
pub fn pullback_metric(
    h_on_quotient: &HermitianForm,
    _gamma: &DiscreteSubgroup,
) -> Result<HermitianForm> {
    Ok(
        HermitianForm::new(h_on_quotient.coeffs().clone(), h_on_quotient.side())?
            .with_provenance(Provenance::PulledBack),
    )
}

/// Inverse of [`pullback_metric`] on coefficients.
pub fn pushforward_metric(
    h_on_cover: &HermitianForm,
    _gamma: &DiscreteSubgroup,
) -> Result<HermitianForm> {
    HermitianForm::new(h_on_cover.coeffs().clone(), h_on_cover.side())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectedVerdict {
    pub verdict: KahlerVerdict,
    /// Always `false`: only centrality of the generators is checked.
    pub discreteness_verified: bool,
}

impl ConnectedVerdict {
    pub fn to_json(&self) -> Value {
        let mut v = self.verdict.to_json();
        v["discreteness_verified"] = json!(self.discreteness_verified);
        v
    }
}

/// Kähler verdict on `G̃/Γ`, decided on the cover after pulling `h` back.
pub fn kahler_verdict_connected(
    descriptor: &Arc<GroupDescriptor>,
    gamma: &DiscreteSubgroup,
    h: &HermitianForm,
    tol: f64,
) -> Result<ConnectedVerdict> {
    if !same_group(descriptor, &gamma.descriptor) {
        return Err(Error::DescriptorMismatch);
    }
    let pulled = pullback_metric(h, gamma)?;
    Ok(ConnectedVerdict {
        verdict: is_kahler(descriptor, &pulled, tol)?,
        discreteness_verified: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::MultiplicityFunction;
    use crate::sampling;
    use crate::{c, CVector, Side, C64};
    use std::f64::consts::PI;

    fn group(triples: &[(C64, usize, usize)]) -> Arc<GroupDescriptor> {
        GroupDescriptor::new(MultiplicityFunction::from_triples(triples).unwrap())
    }

    #[test]
    fn centrality_examples() {
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1)]);
        let zero = CVector::zeros(1);
        let one = g.element(zero.clone(), c(1.0, 0.0)).unwrap();
        assert!(verify_central(&g, &[one], 1e-10).is_ok());
        let half = g.element(zero, c(0.5, 0.0)).unwrap();
        match verify_central(&g, &[g.identity(), half], 1e-10) {
            Err(Error::NonCentral {
                index,
                torus_residual,
                ..
            }) => {
                assert_eq!(index, 1);
                assert!((torus_residual - 2.0).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_central(&g, &[g.identity()], 1e-10).is_ok());
    }

    #[test]
    fn right_gamma_invariance_examples() {
        let mut rng = sampling::rng(3);
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1)]);
        let gamma = verify_central(
            &g,
            &[g.element(CVector::zeros(1), c(1.0, 0.0)).unwrap()],
            1e-10,
        )
        .unwrap();
        let h = HermitianForm::identity(2, Side::Left);
        let points: Vec<_> = (0..20)
            .map(|_| sampling::element(&mut rng, &g, 1.0))
            .collect();
        assert!(check_right_gamma_invariance(&h, &gamma, &points).unwrap() <= 1e-10);

        let nil = group(&[(c(0.0, 0.0), 2, 1)]);
        let shift = nil
            .element(
                CVector::from_vec(vec![c(0.7, -1.2), c(0.0, 0.0)]),
                c(0.0, 0.0),
            )
            .unwrap();
        let gamma = verify_central(&nil, &[shift], 1e-10).unwrap();
        let h = HermitianForm::new(sampling::hermitian_pd(&mut rng, 3), Side::Left).unwrap();
        let points: Vec<_> = (0..20)
            .map(|_| sampling::element(&mut rng, &nil, 1.0))
            .collect();
        assert!(check_right_gamma_invariance(&h, &gamma, &points).unwrap() <= 1e-10);

        let trivial = verify_central(&nil, &[nil.identity()], 1e-10).unwrap();
        assert_eq!(
            check_right_gamma_invariance(&h, &trivial, &points).unwrap(),
            0.0
        );
    }

    #[test]
    fn pullback_keeps_coefficients() {
        let mut rng = sampling::rng(5);
        let g = group(&[(c(1.0, 0.0), 1, 1)]);
        let gamma = verify_central(&g, &[], 1e-10).unwrap();
        let h = HermitianForm::new(sampling::hermitian_pd(&mut rng, 2), Side::Left).unwrap();
        let pulled = pullback_metric(&h, &gamma).unwrap();
        assert_eq!(pulled.coeffs(), h.coeffs());
        assert_eq!(pulled.provenance(), Provenance::PulledBack);
        assert_eq!(pushforward_metric(&pulled, &gamma).unwrap(), h);
    }

    #[test]
    fn connected_verdicts() {
        let g = group(&[(c(0.0, 2.0 * PI), 1, 1)]);
        let gamma = verify_central(
            &g,
            &[g.element(CVector::zeros(1), c(1.0, 0.0)).unwrap()],
            1e-10,
        )
        .unwrap();
        let h = HermitianForm::identity(2, Side::Left);
        let v = kahler_verdict_connected(&g, &gamma, &h, 1e-10).unwrap();
        assert!(!v.verdict.is_kahler && !v.discreteness_verified);
        assert_eq!(v.verdict, is_kahler(&g, &h, 1e-10).unwrap());

        let abelian = group(&[(c(0.0, 0.0), 1, 2)]);
        let trivial = verify_central(&abelian, &[], 1e-10).unwrap();
        let v = kahler_verdict_connected(
            &abelian,
            &trivial,
            &HermitianForm::identity(3, Side::Left),
            1e-10,
        )
        .unwrap();
        assert!(v.verdict.is_kahler && v.verdict.abelian_caveat);
    }
}
