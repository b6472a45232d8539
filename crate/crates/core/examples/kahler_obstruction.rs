// No invariant metric on a non-Abelian almost Abelian group is Kähler: both
// obstruction computations on random metrics, left and right.

use almost_abelian::hermitian::{domega_coordinates, fundamental_form, is_kahler};
use almost_abelian::{sampling, HermitianForm, Side, DEFAULT_TOL};

/// Number of `(descriptor, side, metric)` cases whose verdict matched expectation,
/// and the total number of cases.
pub fn run_example() -> (usize, usize) {
    let mut rng = sampling::rng(5);
    let (mut ok, mut total) = (0, 0);
    for (name, g) in sampling::battery() {
        for side in [Side::Left, Side::Right] {
            let mut smallest = f64::INFINITY;
            for _ in 0..10 {
                let h =
                    HermitianForm::new(sampling::hermitian_pd(&mut rng, g.dim()), side).unwrap();
                let verdict = is_kahler(&g, &h, DEFAULT_TOL).expect("checkers agree");
                smallest = smallest.min(verdict.obstruction_norm / h.coeffs().norm());
                total += 1;
                ok += usize::from(verdict.is_kahler == g.is_abelian() && verdict.method_agreement);
            }
            let h = HermitianForm::identity(g.dim(), side);
            let p = sampling::element(&mut rng, &g, 1.0);
            let coords = domega_coordinates(&g, &fundamental_form(&h), &p).unwrap();
            println!(
                "{name:<26} {:<5} smallest relative obstruction {smallest:.3e}, dω from coordinates (ĥ = I) {coords:.3e}",
                side.as_str()
            );
        }
    }
    println!("{ok}/{total} verdicts as expected (Kähler exactly on the Abelian control)");
    (ok, total)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
