//! Screw form of rigid-body dynamics.
//!
//! Forces assemble into a wrench (resultant force, moment field), momenta
//! into a momentum screw (linear momentum, angular-momentum field). The
//! twist of a rigid body fixes its momentum screw through the inertia
//! operator; kinetic energy and power are Klein products of these screws.
//!
//! Continua are always given as finite lists of point masses. Angular
//! momentum is measured in the inertial frame.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kinematics::Twist;
use crate::lie::{commutator, from_frame, klein_product, to_dual, Frame, Screw6};
use crate::linalg::{null_space, reduced_echelon, symmetric_eigen};
use crate::screw::{AppliedVector, Screw};
use crate::vector::{Mat3, Point, Vec3};

/// Relative singular-value cutoff used by [`reciprocal_subspace`].
pub const RECIPROCAL_RANK_TOL: f64 = 1e-10;

/// Dynamical screw of a force system: resultant force, moment field.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Wrench(pub Screw);

/// Resultant is the linear momentum, field the angular momentum about the
/// evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MomentumScrew(pub Screw);

impl Wrench {
    pub fn force(&self) -> Vec3 {
        self.0.resultant()
    }

    pub fn moment_at(&self, p: Point) -> Vec3 {
        self.0.evaluate(p)
    }
}

impl MomentumScrew {
    pub fn linear_momentum(&self) -> Vec3 {
        self.0.resultant()
    }

    pub fn angular_momentum_at(&self, p: Point) -> Vec3 {
        self.0.evaluate(p)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ForceSystem {
    pub forces: Vec<AppliedVector>,
}

impl ForceSystem {
    pub fn new(forces: Vec<AppliedVector>) -> Result<Self> {
        if forces
            .iter()
            .any(|f| !f.point.coords.is_finite() || !f.vector.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(ForceSystem { forces })
    }
}

/// Resultant `ΣFᵢ`, moment field `M(Q) = Σ (Pᵢ − Q) × Fᵢ`.
pub fn wrench_of(fs: &ForceSystem) -> Wrench {
    Wrench(fs.forces.iter().map(|f| f.to_screw()).sum())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Particle {
    pub mass: f64,
    pub position: Point,
    pub velocity: Option<Vec3>,
}

/// Non-empty list of particles with positive masses.
#[derive(Debug, Clone, PartialEq)]
pub struct MassDistribution {
    particles: Vec<Particle>,
}

impl MassDistribution {
    pub fn new(particles: Vec<Particle>) -> Result<Self> {
        if particles.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for (index, p) in particles.iter().enumerate() {
            if !(p.mass.is_finite() && p.mass > 0.0) {
                return Err(Error::NonPositiveMass { index });
            }
            if !p.position.coords.is_finite() || p.velocity.is_some_and(|v| !v.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        Ok(MassDistribution { particles })
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn total_mass(&self) -> f64 {
        self.particles.iter().map(|p| p.mass).sum()
    }

    pub fn center_of_mass(&self) -> Point {
        let m = self.total_mass();
        Point::from_coords(
            self.particles
                .iter()
                .map(|p| p.position.coords * p.mass)
                .sum::<Vec3>()
                / m,
        )
    }

    /// Same positions and masses, velocities taken from a rigid twist.
    pub fn with_rigid_velocities(&self, k: &Twist) -> MassDistribution {
        MassDistribution {
            particles: self
                .particles
                .iter()
                .map(|p| Particle {
                    velocity: Some(k.0.evaluate(p.position)),
                    ..*p
                })
                .collect(),
        }
    }
}

/// Resultant `Σ mᵢvᵢ`, field `L(Q) = Σ (Rᵢ − Q) × mᵢvᵢ`.
pub fn momentum_screw(md: &MassDistribution) -> Result<MomentumScrew> {
    md.particles
        .iter()
        .map(|p| {
            let v = p.velocity.ok_or(Error::MissingVelocities)?;
            Ok(Screw::from_applied_vector(p.position, v * p.mass))
        })
        .sum::<Result<Screw>>()
        .map(MomentumScrew)
}

/// `η ↦ Σ mᵢ rᵢ × (η × rᵢ)` with `rᵢ = Rᵢ − Q`, as a matrix.
fn inertia_about(md: &MassDistribution, q: Point) -> Mat3 {
    md.particles.iter().fold(Mat3::ZERO, |acc, p| {
        acc + point_inertia(p.mass, p.position - q)
    })
}

/// `m (|r|² I − r rᵀ)`, the matrix of `η ↦ m r × (η × r)`.
fn point_inertia(mass: f64, r: Vec3) -> Mat3 {
    (Mat3::IDENTITY * r.norm_squared() - Mat3::outer(r, r)) * mass
}

/// Mass, center of mass and inertia map at the center of mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InertiaOperator {
    pub total_mass: f64,
    pub center: Point,
    /// Symmetric positive semidefinite.
    pub inertia: Mat3,
}

impl InertiaOperator {
    /// Inertia map about `q` (Huygens–Steiner):
    /// `I_Q(η) = I_C(η) + M (C − Q) × [η × (C − Q)]`.
    pub fn apply_at(&self, q: Point, eta: Vec3) -> Vec3 {
        let d = self.center - q;
        self.inertia * eta + d.cross(eta.cross(d)) * self.total_mass
    }

    pub fn matrix_at(&self, q: Point) -> Mat3 {
        self.inertia + point_inertia(self.total_mass, self.center - q)
    }

    /// Eigenvalues of `I_C`, ascending.
    pub fn principal_values(&self) -> Vec3 {
        symmetric_eigen(&self.inertia).0
    }

    /// `I_C⁻¹`, or `SingularInertia` when a principal value is below
    /// `1e-12` times the largest one.
    pub fn inverse(&self) -> Result<Mat3> {
        invert_inertia(&self.inertia)
    }
}

pub(crate) fn invert_inertia(inertia: &Mat3) -> Result<Mat3> {
    let (vals, vecs) = symmetric_eigen(inertia);
    let largest = vals.max_abs();
    if largest <= 0.0 || vals.x <= 1e-12 * largest {
        return Err(Error::SingularInertia);
    }
    let inv = Vec3::new(1.0 / vals.x, 1.0 / vals.y, 1.0 / vals.z);
    Ok(vecs * Mat3::diagonal(inv) * vecs.transpose())
}

pub fn inertia_of(md: &MassDistribution) -> InertiaOperator {
    let center = md.center_of_mass();
    InertiaOperator {
        total_mass: md.total_mass(),
        center,
        inertia: inertia_about(md, center),
    }
}

/// Momentum screw of a rigid body moving with twist `k`: resultant
/// `M v(C)`, field at the center of mass `I_C(ω)`.
pub fn momentum_from_twist(inertia: &InertiaOperator, k: &Twist) -> MomentumScrew {
    let c = inertia.center;
    MomentumScrew(Screw::from_motor(
        c,
        k.0.evaluate(c) * inertia.total_mass,
        inertia.inertia * k.angular_velocity(),
    ))
}

/// `½ ⟨k, l⟩`.
pub fn kinetic_energy(k: &Twist, l: &MomentumScrew) -> f64 {
    0.5 * klein_product(&k.0, &l.0)
}

/// `⟨k, d⟩`.
pub fn power(k: &Twist, d: &Wrench) -> f64 {
    klein_product(&k.0, &d.0)
}

/// Basis of the screws reciprocal to every screw in `w`.
///
/// The pairing rows are the dual coordinates of `w` in `frame`; the null
/// space has dimension `6 − rank(w)`. The basis is returned in reduced
/// row-echelon form of its coordinates in `frame`, so it depends only on
/// the subspace and the frame.
pub fn reciprocal_subspace(w: &[Screw], frame: &Frame) -> Vec<Screw> {
    let rows: Vec<[f64; 6]> = w.iter().map(|s| to_dual(s, frame).to_array()).collect();
    reduced_echelon(&null_space(&rows, RECIPROCAL_RANK_TOL))
        .into_iter()
        .map(|x| from_frame(&Screw6::from_array(x), frame))
        .collect()
}

/// `(l(t+h) − l(t)) / h − d`, with both momentum screws taken at fixed
/// poles. Vanishes to `O(h)` along any true motion.
pub fn cardinal_derivative(
    l_now: &MomentumScrew,
    l_next: &MomentumScrew,
    h: f64,
    d: &Wrench,
) -> Screw {
    (l_next.0 - l_now.0).scale(1.0 / h) - d.0
}

/// `d + [k, l]`: the derivative of `l` relative to the frame moving with
/// `k`. Its resultant is `F − ω × P`.
pub fn moving_frame_derivative(l: &MomentumScrew, k: &Twist, d: &Wrench) -> Screw {
    d.0 + commutator(&k.0, &l.0)
}
