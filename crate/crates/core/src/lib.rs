//! # screw-core
//!
//! Coordinate-free screw algebra for rigid-body mechanics.
//!
//! A *screw* is a vector field `s` on Euclidean space satisfying
//! `s(P) − s(Q) = s⃗ × (P − Q)`. Rigid velocity fields (twists), moment
//! fields of force systems (wrenches) and angular-momentum fields are all
//! screws, and the screw space is the Lie algebra of the rigid motions.
//!
//! | Module | Content |
//! |--------|---------|
//! | [`screw`] | the screw value type, invariants, axis, pitch |
//! | [`lie`] | Klein form, bracket, `ad`, Killing form, frame coordinates |
//! | [`rigid`] | rigid maps, flow of a screw (`exp`) and Chasles decomposition (`log`) |
//! | [`kinematics`] | twists and motion chains |
//! | [`dynamics`] | wrenches, momentum screws, inertia, energy, power, reciprocity |
//! | [`sim`] | fixed-step rigid-body integrator with conservation diagnostics |
//! | [`reduction`] | reduction to two applied vectors, central axis |
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use screw_core::{Point, Screw, Vec3, Pitch};
//!
//! let s = Screw::from_applied_vector(Point::new(1.0, 0.0, 0.0), Vec3::Z);
//! assert_eq!(s.evaluate(Point::new(1.0, 0.0, 0.0)), Vec3::ZERO);
//! assert_eq!(s.pitch(), Pitch::Finite(0.0));
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dynamics;
pub mod error;
pub mod kinematics;
pub mod lie;
pub mod linalg;
pub mod reduction;
pub mod rigid;
pub mod screw;
pub mod sim;
pub mod vector;

pub use dynamics::{
    cardinal_derivative, inertia_of, kinetic_energy, momentum_from_twist, momentum_screw,
    moving_frame_derivative, power, reciprocal_subspace, wrench_of, ForceSystem, InertiaOperator,
    MassDistribution, MomentumScrew, Particle, Wrench,
};
pub use error::{Error, Result};
pub use kinematics::{compose_chain, instantaneous_axis, point_velocity, MotionChain, Twist};
pub use lie::{
    ad, basis_screws, commutator, from_frame, killing_form, klein_product, to_dual, to_frame,
    Dual6, Frame, Mat6, Screw6,
};
pub use reduction::{
    central_axis_report, decompose_two_applied, AppliedVectorPair, CentralAxisReport,
};
pub use rigid::{compose, exp, log, ChaslesDecomposition, RigidMap};
pub use screw::{AppliedVector, Pitch, Screw, ScrewAxis};
pub use sim::{run, step, BodyState, Integrator, SimConfig, StepDiagnostics, Trajectory};
pub use vector::{Mat3, Point, Vec3};
