//! Screws as values.
//!
//! A screw is a vector field `s` on Euclidean space for which there is a
//! vector `s⃗` (the resultant) such that `s(P) − s(Q) = s⃗ × (P − Q)` for all
//! points. The field is therefore fixed by the resultant together with its
//! value at any single point. We store the value at the global origin, but
//! nothing public depends on that choice: every observable goes through
//! [`Screw::evaluate`].
//!
//! The pitch follows the full-turn normalization `𝓈 = (p / 2π) s⃗`, so that
//! integrating the field through one full rotation translates by exactly `p`
//! along the axis. Many robotics texts use `p = 𝓈·s⃗ / s⃗²` instead; the two
//! differ by the factor `2π`.

use core::f64::consts::TAU;
use core::ops::{Add, Mul, Neg, Sub};

use crate::vector::{Point, Vec3};

/// Relative tolerance used by [`Screw::approx_eq`].
pub const SCREW_EQ_TOL: f64 = 1e-12;

/// Absolute bound on the field below which a zero-resultant screw is the
/// zero screw.
pub const ZERO_SCREW_TOL: f64 = 1e-12;

/// A vector applied at a point: a force on its point of application, an
/// angular velocity on a point of its rotation axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppliedVector {
    pub point: Point,
    pub vector: Vec3,
}

impl AppliedVector {
    pub const fn new(point: Point, vector: Vec3) -> Self {
        AppliedVector { point, vector }
    }

    pub fn to_screw(self) -> Screw {
        Screw::from_applied_vector(self.point, self.vector)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Screw {
    resultant: Vec3,
    moment_at_origin: Vec3,
}

/// Locus where the field has minimum module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScrewAxis {
    /// Zero resultant: the field is constant and every point qualifies.
    Degenerate,
    /// `direction` has unit length.
    Line { point: Point, direction: Vec3 },
}

impl ScrewAxis {
    /// Euclidean distance from `p` to the axis (zero for `Degenerate`).
    pub fn distance_to(&self, p: Point) -> f64 {
        match *self {
            ScrewAxis::Degenerate => 0.0,
            ScrewAxis::Line { point, direction } => (p - point).cross(direction).norm(),
        }
    }

    /// Whether the two describe the same line (direction up to sign).
    pub fn approx_eq(&self, other: &ScrewAxis, tol: f64) -> bool {
        match (*self, *other) {
            (ScrewAxis::Degenerate, ScrewAxis::Degenerate) => true,
            (
                ScrewAxis::Line { point, direction },
                ScrewAxis::Line {
                    point: p2,
                    direction: d2,
                },
            ) => direction.cross(d2).norm() <= tol && (p2 - point).cross(direction).norm() <= tol,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pitch {
    Finite(f64),
    /// Free screw: zero resultant, non-zero field.
    Infinite,
    /// Zero screw; the pitch is undefined.
    ZeroScrew,
}

impl Pitch {
    pub fn finite(self) -> Option<f64> {
        match self {
            Pitch::Finite(p) => Some(p),
            _ => None,
        }
    }
}

/// Below this norm the resultant counts as zero. Scaled by the field at the
/// origin so that tiny screws still get an axis.
pub fn resultant_threshold(moment: Vec3) -> f64 {
    1e-9 * 1.0_f64.max(moment.norm())
}

impl Screw {
    pub const ZERO: Screw = Screw {
        resultant: Vec3::ZERO,
        moment_at_origin: Vec3::ZERO,
    };

    /// Builds a screw from its motor at the global origin.
    pub const fn new(resultant: Vec3, moment_at_origin: Vec3) -> Self {
        Screw {
            resultant,
            moment_at_origin,
        }
    }

    /// The constant field `P ↦ v`.
    pub const fn from_free_vector(v: Vec3) -> Self {
        Screw::new(Vec3::ZERO, v)
    }

    /// The field `P ↦ w × (P − q)`, vanishing at `q`.
    pub fn from_applied_vector(q: Point, w: Vec3) -> Self {
        Screw::new(w, w.cross(Point::ORIGIN - q))
    }

    /// The unique screw with the given resultant taking `value_at_q` at `q`.
    pub fn from_motor(q: Point, resultant: Vec3, value_at_q: Vec3) -> Self {
        Screw::new(resultant, value_at_q + resultant.cross(Point::ORIGIN - q))
    }

    #[inline]
    pub fn resultant(&self) -> Vec3 {
        self.resultant
    }

    #[inline]
    pub fn moment_at_origin(&self) -> Vec3 {
        self.moment_at_origin
    }

    #[inline]
    pub fn evaluate(&self, p: Point) -> Vec3 {
        self.moment_at_origin + self.resultant.cross(p - Point::ORIGIN)
    }

    /// Motor `(s⃗, s(q))` at a reduction point.
    pub fn motor_at(&self, q: Point) -> (Vec3, Vec3) {
        (self.resultant, self.evaluate(q))
    }

    pub fn is_finite(&self) -> bool {
        self.resultant.is_finite() && self.moment_at_origin.is_finite()
    }

    /// Whether the resultant is below [`resultant_threshold`].
    pub fn has_zero_resultant(&self) -> bool {
        self.resultant.norm() <= resultant_threshold(self.moment_at_origin)
    }

    pub fn is_zero(&self) -> bool {
        self.has_zero_resultant() && self.moment_at_origin.norm() <= ZERO_SCREW_TOL
    }

    /// `s(P)·s⃗`, the same for every `P`.
    pub fn scalar_invariant(&self) -> f64 {
        self.moment_at_origin.dot(self.resultant)
    }

    /// Projection of the field on the resultant direction; the field itself
    /// when the resultant vanishes. Equals the field on the axis.
    pub fn vector_invariant(&self) -> Vec3 {
        if self.has_zero_resultant() {
            self.moment_at_origin
        } else {
            self.resultant * (self.scalar_invariant() / self.resultant.norm_squared())
        }
    }

    pub fn axis(&self) -> ScrewAxis {
        if self.has_zero_resultant() {
            return ScrewAxis::Degenerate;
        }
        let r = self.resultant;
        let point = Point::ORIGIN + r.cross(self.moment_at_origin) / r.norm_squared();
        ScrewAxis::Line {
            point,
            direction: r / r.norm(),
        }
    }

    pub fn pitch(&self) -> Pitch {
        if self.is_zero() {
            Pitch::ZeroScrew
        } else if self.has_zero_resultant() {
            Pitch::Infinite
        } else {
            Pitch::Finite(TAU * self.scalar_invariant() / self.resultant.norm_squared())
        }
    }

    /// `|s⃗|`.
    pub fn amplitude(&self) -> f64 {
        self.resultant.norm()
    }

    pub fn scale(&self, k: f64) -> Screw {
        Screw::new(self.resultant * k, self.moment_at_origin * k)
    }

    /// Componentwise comparison of the origin motors with a mixed
    /// absolute/relative tolerance.
    pub fn approx_eq(&self, other: &Screw, tol: f64) -> bool {
        self.resultant.approx_eq(other.resultant, tol)
            && self.moment_at_origin.approx_eq(other.moment_at_origin, tol)
    }
}

impl Add for Screw {
    type Output = Screw;
    fn add(self, o: Screw) -> Screw {
        Screw::new(
            self.resultant + o.resultant,
            self.moment_at_origin + o.moment_at_origin,
        )
    }
}

impl Sub for Screw {
    type Output = Screw;
    fn sub(self, o: Screw) -> Screw {
        self + (-o)
    }
}

impl Neg for Screw {
    type Output = Screw;
    fn neg(self) -> Screw {
        self.scale(-1.0)
    }
}

impl Mul<Screw> for f64 {
    type Output = Screw;
    fn mul(self, s: Screw) -> Screw {
        s.scale(self)
    }
}

impl Mul<f64> for Screw {
    type Output = Screw;
    fn mul(self, k: f64) -> Screw {
        self.scale(k)
    }
}

impl core::iter::Sum for Screw {
    fn sum<I: Iterator<Item = Screw>>(iter: I) -> Screw {
        iter.fold(Screw::ZERO, Add::add)
    }
}
