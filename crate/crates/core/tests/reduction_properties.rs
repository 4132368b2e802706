mod common;

use common::*;
use rand::Rng;
use screw_core::reduction::decompose_two_applied_with_arm;
use screw_core::{
    central_axis_report, decompose_two_applied, wrench_of, AppliedVector, ForceSystem, Pitch,
    Point, Screw, ScrewAxis, Vec3,
};

fn rand_system(rng: &mut impl Rng, n: usize) -> Vec<AppliedVector> {
    (0..n)
        .map(|_| AppliedVector::new(rand_point(rng, 3.0), rand_vec(rng, 2.0)))
        .collect()
}

fn wrench(forces: &[AppliedVector]) -> Screw {
    wrench_of(&ForceSystem::new(forces.to_vec()).unwrap()).0
}

#[test]
fn equivalence_moves_preserve_the_wrench() {
    let mut rng = rng(401);
    for _ in 0..200 {
        let n = rng.random_range(1..8);
        let forces = rand_system(&mut rng, n);
        let reference = wrench(&forces);
        let i = rng.random_range(0..forces.len());

        // Slide one force along its line of action.
        let mut slid = forces.clone();
        slid[i].point = slid[i].point + slid[i].vector * rng.random_range(-3.0..3.0);
        assert!(wrench(&slid).approx_eq(&reference, 1e-12));

        // Replace it by two parallel forces whose weighted application
        // points average back to the original one.
        let f = forces[i];
        let split = rng.random_range(0.1..0.9);
        let offset = rand_vec(&mut rng, 1.0);
        let mut parts = forces.clone();
        parts[i] = AppliedVector::new(f.point + offset * (1.0 - split), f.vector * split);
        parts.push(AppliedVector::new(
            f.point - offset * split,
            f.vector * (1.0 - split),
        ));
        assert!(wrench(&parts).approx_eq(&reference, 1e-12));

        // Changing a force is detected.
        let mut changed = forces.clone();
        changed[i].vector += Vec3::new(0.0, 0.0, 0.5);
        assert!(!wrench(&changed).approx_eq(&reference, 1e-6));
    }
}

#[test]
fn two_applied_vectors_reproduce_random_screws() {
    let mut rng = rng(402);
    for _ in 0..500 {
        let s = rand_screw(&mut rng);
        let pair = decompose_two_applied(&s).unwrap();
        let (r1, r2) = (pair.first.vector, pair.second.vector);
        assert!((r1.norm() - r2.norm()).abs() < 1e-10);
        assert!(r1.dot(r2).abs() < 1e-10);
        let sum = pair.screw();
        for _ in 0..10 {
            let p = rand_point(&mut rng, 10.0);
            assert!(sum.evaluate(p).approx_eq(s.evaluate(p), 1e-10));
        }
    }
}

#[test]
fn couples_and_pure_forces_decompose() {
    let mut rng = rng(403);
    for _ in 0..100 {
        let m = rand_vec(&mut rng, 3.0);
        let s = Screw::from_free_vector(m);
        let arm = rng.random_range(0.2..4.0);
        let pair = decompose_two_applied_with_arm(&s, arm).unwrap();
        assert_eq!(pair.first.vector, -pair.second.vector);
        assert!(((pair.second.point - pair.first.point).norm() - arm).abs() < 1e-12);
        assert!(pair.screw().approx_eq(&s, 1e-12));

        let q = rand_point(&mut rng, 3.0);
        let f = rand_vec(&mut rng, 3.0);
        let s = Screw::from_applied_vector(q, f);
        let pair = decompose_two_applied(&s).unwrap();
        assert!(pair.first.vector.approx_eq(f * 0.5, 1e-14));
        assert!(pair.second.vector.approx_eq(f * 0.5, 1e-14));
        assert!(s.axis().distance_to(pair.first.point) < 1e-12);
        assert!(s.axis().distance_to(pair.second.point) < 1e-12);
        assert!(pair.screw().approx_eq(&s, 1e-12));
    }
}

/// Three forces in the plane z = 0. The resultant lies in the plane and the
/// moment about the origin is along z, so the system reduces to a single
/// force; the axis crosses the x axis where the moment vanishes.
#[test]
fn coplanar_three_force_central_axis() {
    let forces = vec![
        AppliedVector::new(Point::new(0.0, 0.0, 0.0), Vec3::new(3.0, 0.0, 0.0)),
        AppliedVector::new(Point::new(2.0, 1.0, 0.0), Vec3::new(0.0, 4.0, 0.0)),
        AppliedVector::new(Point::new(-1.0, 3.0, 0.0), Vec3::new(1.0, -2.0, 0.0)),
    ];
    // Hand sums: R = (4, 2, 0); M_z(O) = 2·4 + (−1)(−2) − 3·1 = 7.
    let rep = central_axis_report(&ForceSystem::new(forces.clone()).unwrap());
    assert_eq!(rep.resultant, Vec3::new(4.0, 2.0, 0.0));
    assert_eq!(
        rep.wrench.moment_at(Point::ORIGIN),
        Vec3::new(0.0, 0.0, 7.0)
    );
    assert_eq!(rep.pitch, Pitch::Finite(0.0));
    assert!(rep.invariant.norm() < 1e-15);

    // Moment about a second pole, summed by hand: Q = (1, 1, 0) gives
    // 3 + 4 + (4 − 2) = 9.
    let q = Point::new(1.0, 1.0, 0.0);
    let by_hand = Vec3::new(0.0, 0.0, 9.0);
    let direct: Vec3 = forces.iter().map(|f| (f.point - q).cross(f.vector)).sum();
    assert_eq!(direct, by_hand);
    assert!(rep.wrench.moment_at(q).approx_eq(direct, 1e-14));

    // Q = O + R × M(O) / |R|² = (14, −28, 0) / 20.
    let ScrewAxis::Line { point, direction } = rep.axis else {
        panic!()
    };
    assert!(point.approx_eq(Point::new(0.7, -1.4, 0.0), 1e-14));
    assert!(direction.approx_eq(Vec3::new(2.0, 1.0, 0.0) / 5f64.sqrt(), 1e-14));
    // Along y = 0 the moment is 7 − 2x, so the axis crosses at x = 3.5.
    assert!(rep.axis.distance_to(Point::new(3.5, 0.0, 0.0)) < 1e-14);
}
