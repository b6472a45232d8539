//! Seeded property battery behind the `selftest` subcommand.
//!
//! Each battery descriptor runs as its own task with seed `seed + index`, so
//! results do not depend on scheduling.

use std::sync::Arc;
use std::thread;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frames::{check_frame_invariance, frame_at, FrameKind};
use crate::group::GroupDescriptor;
use crate::hermitian::{
    domega_coordinates, domega_structure_constants, fundamental_form, is_kahler, HermitianForm,
};
use crate::linalg::max_abs;
use crate::measures::{check_left_invariance, check_right_invariance, modular};
use crate::sampling;
use crate::{CMatrix, Side};

/// Samples per property and descriptor.
pub const SAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub descriptor: String,
    pub property: &'static str,
    pub worst: f64,
    pub tol: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.worst <= self.tol
    }

    pub fn to_json(&self) -> Value {
        json!({
            "descriptor": self.descriptor,
            "property": self.property,
            "worst": self.worst,
            "tol": self.tol,
            "passed": self.passed(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs the battery. Checker disagreement is reported as an error.
pub fn run(seed: u64) -> Result<SelftestReport> {
    let battery = sampling::battery();
    let results: Vec<Result<Vec<Check>>> = thread::scope(|scope| {
        let handles: Vec<_> = battery
            .iter()
            .enumerate()
            .map(|(i, (name, g))| {
                scope.spawn(move || descriptor_checks(name, g, seed.wrapping_add(i as u64)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("selftest task panicked"))
            .collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(SelftestReport { seed, checks })
}

fn descriptor_checks(name: &str, g: &Arc<GroupDescriptor>, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sampling::rng(seed);
    let d = g.d();
    let mut worst = [0.0f64; 8];
    for _ in 0..SAMPLES {
        let a = sampling::element(&mut rng, g, 1.0);
        let b = sampling::element(&mut rng, g, 1.0);
        let x = sampling::element(&mut rng, g, 1.0);
        let t = sampling::complex(&mut rng, 2.0);

        let dense = (g.j() * t).exp();
        worst[0] = worst[0].max(max_abs(&(g.jordan().exp(t) - dense)));

        let product = a.multiply(&b)?.to_matrix();
        worst[1] = worst[1].max(max_abs(&(product - a.to_matrix() * b.to_matrix())));
        let assoc = a
            .multiply(&b)?
            .multiply(&x)?
            .distance(&a.multiply(&b.multiply(&x)?)?);
        worst[2] = worst[2].max(assoc);
        worst[3] = worst[3].max(a.multiply(&a.inverse())?.distance(&g.identity()));

        worst[4] = worst[4].max(check_left_invariance(&a, &x)? / crate::measures::left_density(&x));
        worst[4] = worst[4].max(check_right_invariance(&a, &x)?);
        let hom = modular(&a.multiply(&b)?) - modular(&a) * modular(&b);
        worst[5] = worst[5].max(hom.abs() / modular(&a.multiply(&b)?));

        for side in [Side::Left, Side::Right] {
            let product =
                frame_at(FrameKind::coframe(side), &x) * frame_at(FrameKind::frame(side), &x);
            worst[6] = worst[6].max(max_abs(&(product - CMatrix::identity(d + 1, d + 1))));
        }
        for kind in FrameKind::ALL {
            worst[6] = worst[6].max(check_frame_invariance(kind, &a, &x)?);
        }

        // the verdict must be negative exactly for non-Abelian descriptors and
        // both routes to dω must agree
        let h = sampling::hermitian_pd(&mut rng, d + 1);
        for side in [Side::Left, Side::Right] {
            let form = HermitianForm::new(h.clone(), side)?;
            let verdict = is_kahler(g, &form, crate::DEFAULT_TOL)?;
            let mut bad = if verdict.is_kahler == g.is_abelian() {
                0.0
            } else {
                1.0
            };
            let omega = fundamental_form(&form);
            let coords = domega_coordinates(g, &omega, &x)?;
            let structure = domega_structure_constants(g, &omega)?;
            bad = f64::max(bad, (coords - structure).abs() / h.norm());
            worst[7] = worst[7].max(bad);
        }
    }
    let labels: [(&'static str, f64); 8] = [
        ("jordan_exp vs dense exponential", 1e-10),
        ("multiply vs matrix product", 1e-10),
        ("associativity", 1e-10),
        ("inverse", 1e-12),
        ("Haar invariance", 1e-10),
        ("modular homomorphism", 1e-10),
        ("frame identities and invariance", 1e-10),
        ("Kähler verdict and dω cross-check", 1e-10),
    ];
    Ok(labels
        .iter()
        .zip(worst)
        .map(|(&(property, tol), worst)| Check {
            descriptor: name.to_string(),
            property,
            worst,
            tol,
        })
        .collect())
}

/// Maps a failing report to an error for callers that need a hard failure.
pub fn require_pass(report: &SelftestReport) -> Result<()> {
    match report.checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(Error::Usage(format!(
            "selftest failed: {} on {} (worst {:e} > {:e})",
            c.property, c.descriptor, c.worst, c.tol
        ))),
    }
}
