// Central quotients `G̃/Γ`: validating generators, right-Γ-invariance of
// invariant metrics, and the Kähler verdict on the quotient.

use std::f64::consts::PI;

use almost_abelian::hermitian::is_kahler;
use almost_abelian::quotient::{
    check_right_gamma_invariance, kahler_verdict_connected, verify_central,
};
use almost_abelian::{
    c, sampling, CVector, GroupDescriptor, HermitianForm, MultiplicityFunction, Side, DEFAULT_TOL,
};

/// Returns `(invariance residual, quotient verdict, cover verdict, [0,1/2] rejected)`.
pub fn run_example() -> (f64, bool, bool, bool) {
    let g = GroupDescriptor::new(
        MultiplicityFunction::from_triples(&[(c(0.0, 2.0 * PI), 1, 1)]).unwrap(),
    );
    let one = g.element(CVector::zeros(1), c(1.0, 0.0)).unwrap();
    let half = g.element(CVector::zeros(1), c(0.5, 0.0)).unwrap();
    let rejected = match verify_central(&g, &[half], DEFAULT_TOL) {
        Err(e) => {
            println!("[0, 1/2] rejected: {e}");
            true
        }
        Ok(_) => false,
    };
    let gamma = verify_central(&g, &[one], DEFAULT_TOL).unwrap();
    println!("Γ = {}", gamma.to_json());

    let mut rng = sampling::rng(6);
    let h = HermitianForm::new(sampling::hermitian_pd(&mut rng, 2), Side::Left).unwrap();
    let points: Vec<_> = (0..50)
        .map(|_| sampling::element(&mut rng, &g, 1.0))
        .collect();
    let residual = check_right_gamma_invariance(&h, &gamma, &points).unwrap();
    println!("right-Γ-invariance residual over 50 points: {residual:e}");

    let quotient = kahler_verdict_connected(&g, &gamma, &h, DEFAULT_TOL).unwrap();
    let cover = is_kahler(&g, &h, DEFAULT_TOL).unwrap();
    println!("quotient verdict: {}", quotient.to_json());
    (
        residual,
        quotient.verdict.is_kahler,
        cover.is_kahler,
        rejected,
    )
}

#[allow(dead_code)]
fn main() {
    run_example();
}
