// Builds `J(ℵ)` from a multiplicity function and evaluates `e^{tJ}` in closed form.

use almost_abelian::{c, CMatrix, MultiplicityFunction};

/// Largest deviation of the closed form from nalgebra's dense exponential.
pub fn run_example() -> f64 {
    let aleph = MultiplicityFunction::parse(
        br#"{"blocks":[{"mu":[1,0],"size":2,"mult":1},{"mu":[0,1],"size":1,"mult":2}]}"#,
    )
    .expect("valid spec");
    println!("canonical spec: {}", aleph.serialize());
    let jordan = aleph.build_jordan();
    println!("dim V = {}, layout = {:?}", jordan.dim(), jordan.layout());

    let t = c(0.5, -0.25);
    let closed = jordan.exp(t);
    let dense: CMatrix = (jordan.entries() * t).exp();
    let err = (&closed - &dense)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    println!("e^(tJ) at t = {t}:\n{closed:.6}");
    println!("max |closed form - dense| = {err:e}");
    err
}

#[allow(dead_code)]
fn main() {
    run_example();
}
