//! Seeded sampling of descriptors, elements and metrics, plus the standard
//! descriptor battery.

use std::f64::consts::PI;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{AlgebraElement, GroupDescriptor, GroupElement};
use crate::multiplicity::{Block, MultiplicityFunction};
use crate::{c, CMatrix, CVector, C64};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Named descriptors covering nilpotent, real and imaginary diagonalizable,
/// mixed, and Abelian cases.
pub fn battery() -> Vec<(&'static str, Arc<GroupDescriptor>)> {
    let mk = |blocks: &[(C64, usize, usize)]| {
        GroupDescriptor::new(MultiplicityFunction::from_triples(blocks).unwrap())
    };
    vec![
        ("nilpotent {(0,2,1)}", mk(&[(c(0.0, 0.0), 2, 1)])),
        ("real {(1,1,1)}", mk(&[(c(1.0, 0.0), 1, 1)])),
        ("imaginary {(2πi,1,1)}", mk(&[(c(0.0, 2.0 * PI), 1, 1)])),
        ("imaginary {(i,1,2)}", mk(&[(c(0.0, 1.0), 1, 2)])),
        (
            "mixed {(1,2,1),(0,1,1)}",
            mk(&[(c(1.0, 0.0), 2, 1), (c(0.0, 0.0), 1, 1)]),
        ),
        ("abelian {(0,1,2)}", mk(&[(c(0.0, 0.0), 1, 2)])),
    ]
}

pub fn complex(rng: &mut impl Rng, scale: f64) -> C64 {
    c(
        rng.random_range(-scale..=scale),
        rng.random_range(-scale..=scale),
    )
}

pub fn vector(rng: &mut impl Rng, len: usize, scale: f64) -> CVector {
    CVector::from_fn(len, |_, _| complex(rng, scale))
}

/// Element with every coordinate's real and imaginary part in `[-scale, scale]`.
pub fn element(rng: &mut impl Rng, group: &Arc<GroupDescriptor>, scale: f64) -> GroupElement {
    let v = vector(rng, group.d(), scale);
    group
        .element(v, complex(rng, scale))
        .expect("finite sample")
}

pub fn algebra_element(rng: &mut impl Rng, d: usize, scale: f64) -> AlgebraElement {
    AlgebraElement::new(vector(rng, d, scale), complex(rng, scale))
}

/// Random multiplicity function with `dim V ≤ max_dim`, eigenvalues drawn from a
/// small set so that repeated and zero eigenvalues occur.
pub fn multiplicity_function(rng: &mut impl Rng, max_dim: usize) -> MultiplicityFunction {
    let target = rng.random_range(1..=max_dim);
    let mut blocks = Vec::new();
    let mut dim = 0;
    while dim < target {
        let size = rng.random_range(1..=(target - dim).min(3));
        let mu = match rng.random_range(0..4) {
            0 => c(0.0, 0.0),
            1 => c(rng.random_range(-1.0..=1.0), 0.0),
            2 => c(0.0, rng.random_range(-PI..=PI)),
            _ => complex(rng, 1.0),
        };
        blocks.push(Block::new(mu, size, 1));
        dim += size;
    }
    MultiplicityFunction::new(blocks).expect("valid random blocks")
}

/// Random Hermitian positive-definite matrix `A A* + δ I` with `δ ∈ [0.1, 1]`.
pub fn hermitian_pd(rng: &mut impl Rng, n: usize) -> CMatrix {
    let a = CMatrix::from_fn(n, n, |_, _| complex(rng, 1.0));
    let shift = rng.random_range(0.1..=1.0);
    let h = &a * a.adjoint() + CMatrix::from_diagonal_element(n, n, c(shift, 0.0));
    // exact Hermitian symmetry
    (&h + h.adjoint()) * c(0.5, 0.0)
}
