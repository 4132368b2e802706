#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use screw_core::{Frame, Mat3, Point, Screw, Vec3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_vec(rng: &mut impl Rng, scale: f64) -> Vec3 {
    Vec3::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

pub fn rand_point(rng: &mut impl Rng, scale: f64) -> Point {
    Point::from_coords(rand_vec(rng, scale))
}

pub fn rand_screw(rng: &mut impl Rng) -> Screw {
    Screw::new(rand_vec(rng, 2.0), rand_vec(rng, 2.0))
}

pub fn rand_unit(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = rand_vec(rng, 1.0);
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Rotation from a random unit quaternion.
pub fn rand_rotation(rng: &mut impl Rng) -> Mat3 {
    let (w, x, y, z) = loop {
        let q: [f64; 4] = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let n = q.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 0.1 && n <= 1.0 {
            break (q[0] / n, q[1] / n, q[2] / n, q[3] / n);
        }
    };
    Mat3::from_rows([
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ])
}

pub fn rand_frame(rng: &mut impl Rng) -> Frame {
    let r = rand_rotation(rng);
    Frame::from_rotation(rand_point(rng, 3.0), &r).expect("quaternion rotation is orthonormal")
}

pub fn vec3_strategy(scale: f64) -> impl Strategy<Value = Vec3> {
    (-scale..scale, -scale..scale, -scale..scale).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

pub fn point_strategy(scale: f64) -> impl Strategy<Value = Point> {
    vec3_strategy(scale).prop_map(Point::from_coords)
}

pub fn screw_strategy() -> impl Strategy<Value = Screw> {
    (vec3_strategy(2.0), vec3_strategy(2.0)).prop_map(|(r, m)| Screw::new(r, m))
}

/// Componentwise closeness relative to the larger operand (floor 1).
pub fn close(a: Vec3, b: Vec3, tol: f64) -> bool {
    a.approx_eq(b, tol)
}
