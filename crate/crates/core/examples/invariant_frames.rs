// Invariant frames and coframes, generator fields, and an invariant Hermitian
// tensor evaluated in coordinates.

use almost_abelian::frames::{check_frame_invariance, frame_at, left_generator, right_generator};
use almost_abelian::{
    c, sampling, CMatrix, CRow, FrameKind, GroupDescriptor, InvariantTensor, MultiplicityFunction,
    Side,
};

/// Returns `(worst coframe·frame - I, worst invariance residual, generator vs frame column residual)`.
pub fn run_example() -> (f64, f64, f64) {
    let g =
        GroupDescriptor::new(MultiplicityFunction::from_triples(&[(c(0.0, 1.0), 1, 2)]).unwrap());
    let n = g.dim();
    let mut rng = sampling::rng(4);
    let (mut duality, mut invariance) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let a = sampling::element(&mut rng, &g, 1.0);
        let p = sampling::element(&mut rng, &g, 1.0);
        for side in [Side::Left, Side::Right] {
            let id = frame_at(FrameKind::coframe(side), &p) * frame_at(FrameKind::frame(side), &p);
            duality = duality.max(
                (id - CMatrix::identity(n, n))
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max),
            );
        }
        for kind in FrameKind::ALL {
            invariance = invariance.max(check_frame_invariance(kind, &a, &p).unwrap());
        }
    }
    println!("coframe·frame = I up to {duality:e}; invariance residual {invariance:e}");

    // left translations are generated by right-invariant fields and vice versa
    let p = sampling::element(&mut rng, &g, 1.0);
    let mut generator = 0.0f64;
    for i in 0..n {
        let x = CRow::from_fn(n, |_, j| if j == i { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let pairs = [
            (left_generator(&x, &p).unwrap(), FrameKind::RightFrame),
            (right_generator(&x, &p).unwrap(), FrameKind::LeftFrame),
        ];
        for (field, kind) in pairs {
            let column = frame_at(kind, &p).column(i).transpose();
            generator = generator.max(
                (field - column)
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max),
            );
        }
    }
    println!("generator fields of basis vectors vs frame columns: {generator:e}");

    let h = InvariantTensor::from_hermitian_coeffs(&CMatrix::identity(n, n), Side::Left).unwrap();
    let components = h.evaluate(&p).unwrap().to_matrix().unwrap();
    println!("left-invariant metric with ĥ = I at p in coordinates:\n{components:.4}");
    (duality, invariance, generator)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
