// Group law, inverses and the matrix representation of `G = ℂ^d ⋊ ℂ`.

use almost_abelian::{c, sampling, AlgebraElement, CVector, GroupDescriptor, MultiplicityFunction};

/// Returns `(matrix-product residual, inverse residual, bracket [e₀, (v,0)] - (Jv,0))`.
pub fn run_example() -> (f64, f64, f64) {
    let aleph = MultiplicityFunction::from_triples(&[(c(1.0, 0.0), 2, 1)]).unwrap();
    let g = GroupDescriptor::new(aleph);
    let mut rng = sampling::rng(1);
    let a = sampling::element(&mut rng, &g, 1.0);
    let b = sampling::element(&mut rng, &g, 1.0);
    let ab = a.multiply(&b).unwrap();
    println!("a   = {}", a.to_json());
    println!("b   = {}", b.to_json());
    println!("a·b = {}", ab.to_json());

    let residual = (ab.to_matrix() - a.to_matrix() * b.to_matrix())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    println!("matrix representation residual = {residual:e}");
    let inverse = a.multiply(&a.inverse()).unwrap().distance(&g.identity());
    println!("|a·a⁻¹ - 1| = {inverse:e}");

    let v = CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 2.0)]);
    let bracket = g
        .bracket(&g.e0(), &AlgebraElement::new(v.clone(), c(0.0, 0.0)))
        .unwrap();
    let expected = g.j() * &v;
    let bracket_err = (&bracket.v - expected)
        .iter()
        .map(|z| z.norm())
        .fold(bracket.t.norm(), f64::max);
    println!("[e0, (v,0)] = {}", bracket.to_json());

    let x = AlgebraElement::new(v, c(0.3, 0.1));
    println!("exp(x) = {}", g.exp_full(&x).unwrap().to_json());
    (residual, inverse, bracket_err)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
