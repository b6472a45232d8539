// Left and right Haar densities, the modular function, and a Monte Carlo
// check that the left Haar measure of a box is translation invariant.

use almost_abelian::measures::{
    check_left_invariance, check_right_invariance, left_density, mc_integrate, modular, CoordBox,
};
use almost_abelian::{c, sampling, GroupDescriptor, HaarDensity, MultiplicityFunction, Side};

/// Returns `(worst pointwise invariance residual, Monte Carlo volume, its standard error)`.
pub fn run_example() -> (f64, f64, f64) {
    let g =
        GroupDescriptor::new(MultiplicityFunction::from_triples(&[(c(1.0, 0.0), 1, 1)]).unwrap());
    let mut rng = sampling::rng(2);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a = sampling::element(&mut rng, &g, 1.0);
        let x = sampling::element(&mut rng, &g, 1.0);
        worst = worst.max(check_left_invariance(&a, &x).unwrap() / left_density(&x));
        worst = worst.max(check_right_invariance(&a, &x).unwrap());
    }
    println!("worst pointwise invariance residual over 100 pairs: {worst:e}");

    let x = sampling::element(&mut rng, &g, 1.0);
    println!(
        "at x = {}: modular = {}, left density = {}",
        x.to_json(),
        modular(&x),
        left_density(&x)
    );

    // Left Haar volume of the unit box: ∫ e^{-2 Re t} over Re t ∈ [0,1] is (1 - e^{-2})/2.
    let density = HaarDensity::new(Side::Left, g.clone());
    let estimate = mc_integrate(|_| 1.0, &CoordBox::unit(g.d()), &density, 20_000, 7).unwrap();
    println!(
        "left Haar volume of the unit box: {:.5} ± {:.5} (exact {:.5})",
        estimate.estimate,
        estimate.std_error,
        (1.0 - (-2.0f64).exp()) / 2.0
    );
    (worst, estimate.estimate, estimate.std_error)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
