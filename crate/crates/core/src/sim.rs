//! Fixed-step rigid-body integrator driven by the cardinal equations.
//!
//! The state carries the momentum screw (`P`, `L(C)`) rather than
//! velocities: `dP/dt = F` and `dL(C)/dt = M(C)` (the pole moves with the
//! center of mass, so the `P × v(C)` term vanishes). The angular velocity is
//! recovered as `ω = I_C⁻¹ L(C)` with `I_C = R I_body Rᵀ`, and the
//! orientation advances by the exponential of `ω dt`.

use alloc::vec::Vec;

use crate::dynamics::{
    invert_inertia, kinetic_energy, moving_frame_derivative, power, InertiaOperator, MomentumScrew,
    Wrench,
};
use crate::error::{Error, Result};
use crate::kinematics::Twist;
use crate::rigid::rotation_exp;
use crate::screw::Screw;
use crate::vector::{Mat3, Point, Vec3};

/// Orientation drift that triggers re-orthonormalization.
pub const ORIENTATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Integrator {
    /// Explicit midpoint, second order.
    #[default]
    Midpoint,
    /// Explicit Euler, first order.
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum WrenchSource {
    #[default]
    Zero,
    /// The same wrench, fixed in space, at every step.
    Constant(Wrench),
}

impl WrenchSource {
    pub fn wrench(&self) -> Wrench {
        match *self {
            WrenchSource::Zero => Wrench::default(),
            WrenchSource::Constant(w) => w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub dt: f64,
    pub steps: usize,
    pub wrench: WrenchSource,
    pub integrator: Integrator,
    /// Body-frame offset from the center of mass of the material point used
    /// as moving pole in the moving-frame diagnostic.
    pub probe: Vec3,
}

impl SimConfig {
    pub fn new(dt: f64, steps: usize) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidConfig("dt must be positive"));
        }
        if steps == 0 {
            return Err(Error::InvalidConfig("steps must be at least 1"));
        }
        Ok(SimConfig {
            dt,
            steps,
            wrench: WrenchSource::Zero,
            integrator: Integrator::Midpoint,
            probe: Vec3::X,
        })
    }

    pub fn with_wrench(mut self, wrench: Wrench) -> Self {
        self.wrench = WrenchSource::Constant(wrench);
        self
    }

    pub fn with_integrator(mut self, integrator: Integrator) -> Self {
        self.integrator = integrator;
        self
    }

    pub fn with_probe(mut self, probe: Vec3) -> Self {
        self.probe = probe;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyState {
    /// Body-to-world rotation.
    pub orientation: Mat3,
    pub center: Point,
    pub linear_momentum: Vec3,
    /// Angular momentum about the center of mass.
    pub angular_momentum: Vec3,
    /// Mass and inertia map in body axes; `center` is unused.
    pub body: InertiaOperator,
}

impl BodyState {
    pub fn new(
        body: InertiaOperator,
        orientation: Mat3,
        center: Point,
        linear_momentum: Vec3,
        angular_momentum: Vec3,
    ) -> Result<Self> {
        if !(body.total_mass.is_finite() && body.total_mass > 0.0) {
            return Err(Error::InvalidConfig("body mass must be positive"));
        }
        if orientation.orthonormality_defect() > ORIENTATION_TOL
            || (orientation.determinant() - 1.0).abs() > ORIENTATION_TOL
        {
            return Err(Error::InvalidRotation);
        }
        if !(center.coords.is_finite()
            && linear_momentum.is_finite()
            && angular_momentum.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(BodyState {
            orientation,
            center,
            linear_momentum,
            angular_momentum,
            body,
        })
    }

    /// Body axes aligned with the world at the start; momenta from the twist.
    pub fn from_twist(inertia: &InertiaOperator, k: &Twist) -> Result<Self> {
        let l = crate::dynamics::momentum_from_twist(inertia, k);
        BodyState::new(
            InertiaOperator {
                center: Point::ORIGIN,
                ..*inertia
            },
            Mat3::IDENTITY,
            inertia.center,
            l.linear_momentum(),
            l.angular_momentum_at(inertia.center),
        )
    }

    /// `I_C = R I_body Rᵀ`.
    pub fn world_inertia(&self) -> Mat3 {
        self.orientation * self.body.inertia * self.orientation.transpose()
    }

    pub fn angular_velocity(&self) -> Result<Vec3> {
        angular_velocity(&self.orientation, &self.body.inertia, self.angular_momentum)
    }

    pub fn center_velocity(&self) -> Vec3 {
        self.linear_momentum / self.body.total_mass
    }

    pub fn twist(&self) -> Result<Twist> {
        Ok(Twist::from_velocity_at(
            self.center,
            self.angular_velocity()?,
            self.center_velocity(),
        ))
    }

    pub fn momentum(&self) -> MomentumScrew {
        MomentumScrew(Screw::from_motor(
            self.center,
            self.linear_momentum,
            self.angular_momentum,
        ))
    }

    pub fn kinetic_energy(&self) -> Result<f64> {
        Ok(kinetic_energy(&self.twist()?, &self.momentum()))
    }

    /// World position of the material point at `offset` (body axes) from C.
    pub fn material_point(&self, offset: Vec3) -> Point {
        self.center + self.orientation * offset
    }
}

fn angular_velocity(orientation: &Mat3, body_inertia: &Mat3, l: Vec3) -> Result<Vec3> {
    let inv = invert_inertia(body_inertia)?;
    Ok(*orientation * (inv * (orientation.transpose() * l)))
}

fn reorthonormalize(r: Mat3) -> Mat3 {
    let defect = r.orthonormality_defect();
    if defect <= ORIENTATION_TOL {
        return r;
    }
    log::debug!("orientation drift {defect:e}, projecting back onto SO(3)");
    // Newton–Schulz iteration towards the polar factor.
    let mut x = r;
    for _ in 0..16 {
        x = x * (Mat3::IDENTITY * 3.0 - x.transpose() * x) * 0.5;
        if x.orthonormality_defect() < 1e-15 {
            break;
        }
    }
    x
}

/// Advances one step; also returns the angular velocity applied over it.
fn advance(
    state: &BodyState,
    wrench: &Wrench,
    dt: f64,
    integrator: Integrator,
) -> Result<(BodyState, Vec3)> {
    let m = state.body.total_mass;
    let force = wrench.force();
    let omega0 = state.angular_velocity()?;

    let (center_rate, moment, omega) = match integrator {
        Integrator::Euler => (
            state.linear_momentum / m,
            wrench.moment_at(state.center),
            omega0,
        ),
        Integrator::Midpoint => {
            let h = 0.5 * dt;
            let p_half = state.linear_momentum + force * h;
            let c_half = state.center + state.linear_momentum / m * h;
            let l_half = state.angular_momentum + wrench.moment_at(state.center) * h;
            let r_half = rotation_exp(omega0 * h) * state.orientation;
            let omega_half = angular_velocity(&r_half, &state.body.inertia, l_half)?;
            (p_half / m, wrench.moment_at(c_half), omega_half)
        }
    };

    let next = BodyState {
        orientation: reorthonormalize(rotation_exp(omega * dt) * state.orientation),
        center: state.center + center_rate * dt,
        linear_momentum: state.linear_momentum + force * dt,
        angular_momentum: state.angular_momentum + moment * dt,
        body: state.body,
    };
    Ok((next, omega))
}

/// One explicit-midpoint step under a wrench fixed in space.
pub fn step(state: &BodyState, wrench: &Wrench, dt: f64) -> Result<BodyState> {
    step_with(state, wrench, dt, Integrator::Midpoint)
}

pub fn step_with(
    state: &BodyState,
    wrench: &Wrench,
    dt: f64,
    integrator: Integrator,
) -> Result<BodyState> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidConfig("dt must be positive"));
    }
    advance(state, wrench, dt, integrator).map(|(s, _)| s)
}

/// Per-step quantities, all referring to the step starting at `time`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepDiagnostics {
    pub time: f64,
    /// `T` at the start of the step.
    pub kinetic_energy: f64,
    /// `(T(t + dt) − T(t)) / dt`.
    pub energy_rate: f64,
    /// `⟨k, d⟩` at the start of the step.
    pub power: f64,
    /// `ω·(dI_C/dt)(ω)` with a centered difference of `I_C` and the angular
    /// velocity applied over the step.
    pub inertia_rate: f64,
    /// Norm of `dl/dt)_R − (d + [k, l])` at the probe point, with the
    /// derivative taken by forward difference along the material probe.
    pub moving_frame_residual: f64,
}

fn diagnose(
    time: f64,
    dt: f64,
    before: &BodyState,
    after: &BodyState,
    applied_omega: Vec3,
    wrench: &Wrench,
    probe: Vec3,
) -> Result<StepDiagnostics> {
    let k = before.twist()?;
    let l0 = before.momentum();
    let l1 = after.momentum();
    let t0 = kinetic_energy(&k, &l0);
    let t1 = after.kinetic_energy()?;

    let i_rate = (after.world_inertia() - before.world_inertia()) * (1.0 / dt);
    let inertia_rate = applied_omega.dot(i_rate * applied_omega);

    // Lagrangian derivative of L at a material point, then Poisson correction.
    let q0 = before.material_point(probe);
    let q1 = after.material_point(probe);
    let omega = k.angular_velocity();
    let moment_total = (l1.angular_momentum_at(q1) - l0.angular_momentum_at(q0)) / dt;
    let relative_moment = moment_total - omega.cross(l0.angular_momentum_at(q0));
    let relative_resultant =
        (l1.linear_momentum() - l0.linear_momentum()) / dt - omega.cross(l0.linear_momentum());
    let expected = moving_frame_derivative(&l0, &k, wrench);
    let dr = relative_resultant - expected.resultant();
    let dm = relative_moment - expected.evaluate(q0);
    let moving_frame_residual = libm::sqrt(dr.norm_squared() + dm.norm_squared());

    Ok(StepDiagnostics {
        time,
        kinetic_energy: t0,
        energy_rate: (t1 - t0) / dt,
        power: power(&k, wrench),
        inertia_rate,
        moving_frame_residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// `steps + 1` states, the initial one first.
    pub states: Vec<BodyState>,
    pub diagnostics: Vec<StepDiagnostics>,
}

/// Runs the simulation, calling `on_step` after every step with the new
/// state and the diagnostics of the step that produced it. Returns the
/// final state.
pub fn run_streaming<F>(
    config: &SimConfig,
    initial: &BodyState,
    mut on_step: F,
) -> Result<BodyState>
where
    F: FnMut(&BodyState, &StepDiagnostics),
{
    SimConfig::new(config.dt, config.steps)?;
    let wrench = config.wrench.wrench();
    let mut state = *initial;
    for n in 0..config.steps {
        let (next, omega) = advance(&state, &wrench, config.dt, config.integrator)?;
        let diag = diagnose(
            n as f64 * config.dt,
            config.dt,
            &state,
            &next,
            omega,
            &wrench,
            config.probe,
        )?;
        on_step(&next, &diag);
        state = next;
    }
    Ok(state)
}

/// Deterministic: equal inputs give bitwise-equal trajectories.
pub fn run(config: &SimConfig, initial: &BodyState) -> Result<Trajectory> {
    let mut states = Vec::with_capacity(config.steps + 1);
    let mut diagnostics = Vec::with_capacity(config.steps);
    states.push(*initial);
    run_streaming(config, initial, |s, d| {
        states.push(*s);
        diagnostics.push(*d);
    })?;
    Ok(Trajectory {
        states,
        diagnostics,
    })
}
