//! Embedded identity suite: the algebraic identities of the screw Lie
//! algebra checked on seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use screw_core::{
    ad, basis_screws, commutator, killing_form, klein_product, Frame, Mat3, Point, Screw, Vec3,
};

const SAMPLES: usize = 200;

pub struct Check {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_residual <= self.tolerance
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.passed(),
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
        })
    }
}

fn rand_vec(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
    )
}

fn rand_screw(rng: &mut impl Rng) -> Screw {
    Screw::new(rand_vec(rng), rand_vec(rng))
}

/// Random right-handed orthonormal frame by Gram–Schmidt.
fn rand_frame(rng: &mut impl Rng) -> Frame {
    loop {
        let (a, b) = (rand_vec(rng), rand_vec(rng));
        let Some(e1) = a.normalized() else { continue };
        let Some(e2) = (b - e1 * b.dot(e1)).normalized() else {
            continue;
        };
        let rot = Mat3::from_columns(e1, e2, e1.cross(e2));
        if let Ok(f) = Frame::from_rotation(Point::from_coords(rand_vec(rng)), &rot) {
            return f;
        }
    }
}

fn screw_gap(a: &Screw, b: &Screw) -> f64 {
    (a.resultant() - b.resultant())
        .max_abs()
        .max((a.moment_at_origin() - b.moment_at_origin()).max_abs())
}

pub fn run_checks(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut klein = 0.0_f64;
    let mut killing = 0.0_f64;
    let mut jacobi = 0.0_f64;
    for _ in 0..SAMPLES {
        let (x, y, z) = (
            rand_screw(&mut rng),
            rand_screw(&mut rng),
            rand_screw(&mut rng),
        );
        klein = klein.max(
            (klein_product(&commutator(&z, &x), &y) + klein_product(&x, &commutator(&z, &y))).abs(),
        );
        let frame = rand_frame(&mut rng);
        let trace = (ad(&x, &frame) * ad(&y, &frame)).trace();
        killing = killing.max((trace - killing_form(&x, &y)).abs());
        let cyclic = commutator(&x, &commutator(&y, &z))
            + commutator(&y, &commutator(&z, &x))
            + commutator(&z, &commutator(&x, &y));
        jacobi = jacobi.max(screw_gap(&cyclic, &Screw::ZERO));
    }

    let frame = rand_frame(&mut rng);
    let b = basis_screws(&frame);
    let mut table = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let (ff, fm) = if i == j {
                (Screw::ZERO, Screw::ZERO)
            } else {
                // k is the remaining index; eps the sign of (i, j, k).
                let k = 3 - i - j;
                let eps = if (j + 3 - i) % 3 == 1 { 1.0 } else { -1.0 };
                (b[k] * -eps, b[3 + k] * -eps)
            };
            table = table
                .max(screw_gap(&commutator(&b[3 + i], &b[3 + j]), &Screw::ZERO))
                .max(screw_gap(&commutator(&b[i], &b[3 + j]), &fm))
                .max(screw_gap(&commutator(&b[i], &b[j]), &ff));
        }
    }

    vec![
        Check {
            name: "klein_invariance",
            max_residual: klein,
            tolerance: 1e-12,
        },
        Check {
            name: "killing_closed_form",
            max_residual: killing,
            tolerance: 1e-9,
        },
        Check {
            name: "jacobi_identity",
            max_residual: jacobi,
            tolerance: 1e-12,
        },
        Check {
            name: "commutation_table",
            max_residual: table,
            tolerance: 1e-14,
        },
    ]
}
