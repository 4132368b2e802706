//! Twists and relative-motion chains.
//!
//! A rigid velocity field satisfies `v(P) − v(Q) = ω × (P − Q)`, so it is a
//! screw with resultant `ω`. Relative motions compose by adding their twists.
//! Every twist in a chain must be taken at the same instant and expressed in
//! the ground frame; nothing is transformed automatically.

use alloc::vec::Vec;
use core::ops::Add;

use crate::error::{Error, Result};
use crate::screw::{Screw, ScrewAxis};
use crate::vector::{Point, Vec3};

/// Kinematical screw: resultant is the angular velocity, field the velocity.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Twist(pub Screw);

impl Twist {
    pub const ZERO: Twist = Twist(Screw::ZERO);

    /// Rotation with angular velocity `omega` about the line through `point`.
    pub fn rotation_about(point: Point, omega: Vec3) -> Self {
        Twist(Screw::from_applied_vector(point, omega))
    }

    pub fn translation(v: Vec3) -> Self {
        Twist(Screw::from_free_vector(v))
    }

    /// From the angular velocity and the velocity of one point.
    pub fn from_velocity_at(point: Point, omega: Vec3, velocity: Vec3) -> Self {
        Twist(Screw::from_motor(point, omega, velocity))
    }

    pub fn screw(&self) -> &Screw {
        &self.0
    }

    pub fn angular_velocity(&self) -> Vec3 {
        self.0.resultant()
    }
}

impl Add for Twist {
    type Output = Twist;
    fn add(self, o: Twist) -> Twist {
        Twist(self.0 + o.0)
    }
}

/// Relative twists `K⁽ⁱ⁾ → K⁽ⁱ⁺¹⁾`, non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct MotionChain {
    relative_twists: Vec<Twist>,
}

impl MotionChain {
    pub fn new(relative_twists: Vec<Twist>) -> Result<Self> {
        if relative_twists.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(MotionChain { relative_twists })
    }

    pub fn twists(&self) -> &[Twist] {
        &self.relative_twists
    }
}

/// Twist of the last body relative to the first.
pub fn compose_chain(chain: &MotionChain) -> Twist {
    Twist(chain.relative_twists.iter().map(|k| k.0).sum())
}

/// Screw axis of the twist; `Degenerate` for a pure translation or rest.
pub fn instantaneous_axis(k: &Twist) -> ScrewAxis {
    k.0.axis()
}

pub fn point_velocity(k: &Twist, p: Point) -> Vec3 {
    k.0.evaluate(p)
}

/// Two opposite rotations whose sum is the translation `v`.
///
/// The angular velocities are `±|v| n` with `n` a unit vector orthogonal
/// to `v`; the second axis is offset from `anchor` by the unit arm
/// `(v × n) / |v|`, so that `ω × arm = v`.
pub fn rotation_couple(v: Vec3, anchor: Point) -> [Twist; 2] {
    let speed = v.norm();
    if speed == 0.0 {
        return [Twist::ZERO, Twist::ZERO];
    }
    let n = v.any_orthogonal();
    let omega = n * speed;
    let arm = v.cross(omega) / (speed * speed);
    [
        Twist::rotation_about(anchor, omega),
        Twist::rotation_about(anchor + arm, -omega),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn empty_chain_is_rejected() {
        assert_eq!(MotionChain::new(vec![]), Err(Error::EmptyChain));
    }

    #[test]
    fn single_element_chain() {
        let k = Twist::from_velocity_at(Point::new(1.0, 0.0, 2.0), Vec3::Y, Vec3::X);
        assert_eq!(compose_chain(&MotionChain::new(vec![k]).unwrap()), k);
    }

    #[test]
    fn opposite_rotations_translate() {
        let omega = Vec3::new(0.0, 0.0, 3.0);
        let chain = MotionChain::new(vec![
            Twist::rotation_about(Point::ORIGIN, omega),
            Twist::rotation_about(Point::new(2.0, 0.0, 0.0), -omega),
        ])
        .unwrap();
        let k = compose_chain(&chain);
        assert_eq!(k.angular_velocity(), Vec3::ZERO);
        assert_eq!(instantaneous_axis(&k), ScrewAxis::Degenerate);
        let v = point_velocity(&k, Point::new(-4.0, 1.0, 7.0));
        assert!((v.norm() - 6.0).abs() < 1e-12);
        assert!(v.dot(Vec3::X).abs() < 1e-12 && v.dot(Vec3::Z).abs() < 1e-12);
    }

    #[test]
    fn rotation_plus_perpendicular_translation_shifts_axis() {
        // ω = ẑ, v(O) = (0, 2, 0): axis shifts by |v|/|ω| = 2, to x = −2.
        let k = Twist::from_velocity_at(Point::ORIGIN, Vec3::Z, Vec3::new(0.0, 2.0, 0.0));
        assert!(instantaneous_axis(&k).approx_eq(
            &ScrewAxis::Line {
                point: Point::new(-2.0, 0.0, 0.0),
                direction: Vec3::Z
            },
            1e-15
        ));
    }

    #[test]
    fn point_velocity_examples() {
        let k = Twist::rotation_about(Point::ORIGIN, Vec3::Z);
        assert_eq!(point_velocity(&k, Point::new(1.0, 0.0, 0.0)), Vec3::Y);
        assert_eq!(point_velocity(&k, Point::new(0.0, 0.0, 5.0)), Vec3::ZERO);
        let v = Vec3::new(1.0, 2.0, 3.0);
        assert_eq!(
            point_velocity(&Twist::translation(v), Point::new(9.0, 9.0, 9.0)),
            v
        );
    }

    #[test]
    fn rotation_couple_reproduces_translation() {
        let v = Vec3::new(0.5, -1.5, 2.0);
        let [a, b] = rotation_couple(v, Point::new(1.0, 1.0, 1.0));
        assert!(a.0.pitch().finite().unwrap().abs() < 1e-12);
        let sum = a + b;
        assert!(sum.0.approx_eq(&Twist::translation(v).0, 1e-12));
    }
}
