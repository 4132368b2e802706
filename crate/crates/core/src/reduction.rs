//! Reduction of screws and force systems to simple equivalent systems.
//!
//! Two systems of applied vectors are equivalent when they give the same
//! screw. Any non-zero screw is the sum of two applied vectors:
//!
//! * zero resultant: an opposite pair (a couple) in a plane orthogonal to
//!   the field;
//! * non-zero resultant: two legs `½s⃗ ± w` placed symmetrically about the
//!   axis, with `w`, the offset and `s⃗` mutually orthogonal and
//!   `|w| = |s⃗|/2`, so the legs have equal magnitude and are perpendicular.
//!
//! The construction leaves a rotation about the axis free; it is fixed by
//! taking the offset along the projection of `X` (or `Y` when the axis is
//! close to `X`) onto the plane orthogonal to the resultant. Zero-pitch
//! screws have no couple part: both legs are `½s⃗`, one arm apart along the
//! axis.

use crate::dynamics::{wrench_of, ForceSystem, Wrench};
use crate::error::{Error, Result};
use crate::screw::{AppliedVector, Pitch, Screw, ScrewAxis};
use crate::vector::{Point, Vec3};

/// Arm used when the construction leaves it free.
pub const DEFAULT_ARM: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppliedVectorPair {
    pub first: AppliedVector,
    pub second: AppliedVector,
}

impl AppliedVectorPair {
    pub fn screw(&self) -> Screw {
        self.first.to_screw() + self.second.to_screw()
    }
}

pub fn decompose_two_applied(s: &Screw) -> Result<AppliedVectorPair> {
    decompose_two_applied_with_arm(s, DEFAULT_ARM)
}

/// As [`decompose_two_applied`], with the free arm length given explicitly.
/// Only the couple and zero-pitch branches have a free arm.
pub fn decompose_two_applied_with_arm(s: &Screw, arm: f64) -> Result<AppliedVectorPair> {
    if s.is_zero() {
        return Err(Error::ZeroScrew);
    }
    if !(arm.is_finite() && arm > 0.0) {
        return Err(Error::InvalidConfig("arm must be positive"));
    }

    let ScrewAxis::Line {
        point: q,
        direction: e,
    } = s.axis()
    else {
        // Couple: (O, w) and (O + a, −w) give the constant field w × a.
        let m = s.moment_at_origin();
        let a = m.any_orthogonal() * arm;
        let w = a.cross(m) / a.norm_squared();
        return Ok(AppliedVectorPair {
            first: AppliedVector::new(Point::ORIGIN, w),
            second: AppliedVector::new(Point::ORIGIN + a, -w),
        });
    };

    let r = s.resultant();
    let amplitude = r.norm();
    let half = r * 0.5;
    // Signed translation rate along the axis: 𝓈 = lambda · e.
    let lambda = s.vector_invariant().dot(e);

    if lambda.abs() <= 1e-12 * amplitude.max(1.0) {
        let offset = e * (0.5 * arm);
        return Ok(AppliedVectorPair {
            first: AppliedVector::new(q - offset, half),
            second: AppliedVector::new(q + offset, half),
        });
    }

    // Legs ½s⃗ + w at Q + b and ½s⃗ − w at Q − b add up to s⃗ × (P − Q) − 2 w × b,
    // so w × b = −λ e / 2 with |w| = |s⃗|/2 and |b| = |λ| / |s⃗|.
    let b_dir = e.any_orthogonal();
    let b = b_dir * (lambda.abs() / amplitude);
    let w = b_dir.cross(e) * (-lambda.signum() * amplitude * 0.5);
    Ok(AppliedVectorPair {
        first: AppliedVector::new(q + b, half + w),
        second: AppliedVector::new(q - b, half - w),
    })
}

/// Central axis and invariants of a force system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentralAxisReport {
    pub wrench: Wrench,
    pub axis: ScrewAxis,
    pub pitch: Pitch,
    pub invariant: Vec3,
    pub resultant: Vec3,
}

pub fn central_axis_report(fs: &ForceSystem) -> CentralAxisReport {
    let wrench = wrench_of(fs);
    let s = wrench.0;
    CentralAxisReport {
        wrench,
        axis: s.axis(),
        pitch: s.pitch(),
        invariant: s.vector_invariant(),
        resultant: s.resultant(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn agrees(pair: &AppliedVectorPair, s: &Screw) -> bool {
        [
            Point::ORIGIN,
            Point::new(1.0, -2.0, 3.0),
            Point::new(-4.0, 0.5, 0.0),
            Point::new(10.0, 10.0, -10.0),
        ]
        .iter()
        .all(|&p| pair.screw().evaluate(p).approx_eq(s.evaluate(p), 1e-12))
    }

    #[test]
    fn zero_screw_is_rejected() {
        assert_eq!(decompose_two_applied(&Screw::ZERO), Err(Error::ZeroScrew));
    }

    #[test]
    fn couple_branch() {
        let m = Vec3::new(0.0, 0.0, 5.0);
        let s = Screw::from_free_vector(m);
        let pair = decompose_two_applied(&s).unwrap();
        let (w, a) = (pair.first.vector, pair.second.point - pair.first.point);
        assert_eq!(pair.second.vector, -w);
        assert!((a.norm() - 1.0).abs() < 1e-15);
        assert!(w.dot(m).abs() < 1e-15 && a.dot(w).abs() < 1e-15 && a.dot(m).abs() < 1e-15);
        assert!((w.norm() * a.norm() - 5.0).abs() < 1e-14);
        assert!(agrees(&pair, &s));

        let wide = decompose_two_applied_with_arm(&s, 2.5).unwrap();
        assert!(((wide.second.point - wide.first.point).norm() - 2.5).abs() < 1e-15);
        assert!(agrees(&wide, &s));
    }

    #[test]
    fn zero_pitch_branch() {
        let s = Screw::from_applied_vector(Point::new(1.0, 2.0, 0.0), Vec3::new(0.0, 2.0, 0.0));
        let pair = decompose_two_applied(&s).unwrap();
        assert_eq!(pair.first.vector, Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(pair.second.vector, Vec3::new(0.0, 1.0, 0.0));
        assert!(pair.first.point.distance(pair.second.point) > 0.5);
        assert!(s.axis().distance_to(pair.first.point) < 1e-14);
        assert!(s.axis().distance_to(pair.second.point) < 1e-14);
        assert!(agrees(&pair, &s));
    }

    #[test]
    fn general_branch_is_perpendicular_and_equal() {
        for s in [
            Screw::new(Vec3::new(0.0, 0.0, 2.0), Vec3::new(1.0, 0.0, 3.0)),
            Screw::new(
                Vec3::new(1.0, 1.0, 0.0),
                Vec3::new(0.0, 0.0, -1.0) + Vec3::new(-1.0, -1.0, 0.0),
            ),
            Screw::new(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.3, 0.0, 0.0)),
        ] {
            let pair = decompose_two_applied(&s).unwrap();
            let (r1, r2) = (pair.first.vector, pair.second.vector);
            assert!((r1.norm() - r2.norm()).abs() < 1e-12, "{s:?}");
            assert!(r1.dot(r2).abs() < 1e-12, "{s:?}");
            assert!(agrees(&pair, &s), "{s:?}");
        }
    }

    #[test]
    fn central_axis_examples() {
        let p = Point::new(1.0, 2.0, 3.0);
        let fs = ForceSystem::new(vec![AppliedVector::new(p, Vec3::new(0.0, 0.0, -9.8))]).unwrap();
        let rep = central_axis_report(&fs);
        assert_eq!(rep.pitch, Pitch::Finite(0.0));
        assert!(rep.axis.distance_to(p) < 1e-14);

        let f = Vec3::X;
        let couple = ForceSystem::new(vec![
            AppliedVector::new(Point::ORIGIN, f),
            AppliedVector::new(Point::new(0.0, 1.0, 0.0), -f),
        ])
        .unwrap();
        let rep = central_axis_report(&couple);
        assert_eq!(rep.axis, ScrewAxis::Degenerate);
        assert_eq!(rep.pitch, Pitch::Infinite);
    }
}
