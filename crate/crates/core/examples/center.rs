// Center of `G`: the kernel of `J` and the lattice `T = {s : e^{sJ} = 1}`.

use std::f64::consts::PI;

use almost_abelian::{c, GroupDescriptor, MultiplicityFunction, TorusLattice, DEFAULT_TOL};

/// Lattice descriptions for a few descriptors, in order.
pub fn run_example() -> Vec<TorusLattice> {
    let cases = [
        ("{(2πi,1,1)}", vec![(c(0.0, 2.0 * PI), 1, 1)]),
        (
            "{(2πi,1,1),(3πi,1,1)}",
            vec![(c(0.0, 2.0 * PI), 1, 1), (c(0.0, 3.0 * PI), 1, 1)],
        ),
        ("{(1,1,1)}", vec![(c(1.0, 0.0), 1, 1)]),
        ("{(0,2,1)}", vec![(c(0.0, 0.0), 2, 1)]),
        ("{(0,1,2)}", vec![(c(0.0, 0.0), 1, 2)]),
    ];
    cases
        .iter()
        .map(|(name, triples)| {
            let g = GroupDescriptor::new(MultiplicityFunction::from_triples(triples).unwrap());
            let center = g.center(DEFAULT_TOL);
            println!("{name}: {}", center.to_json());
            center.torus_lattice
        })
        .collect()
}

#[allow(dead_code)]
fn main() {
    run_example();
}
