//! One function per subcommand. Each returns the report tree; `simulate`
//! streams its records instead.

use std::io::Write;

use serde_json::{json, Value};

use screw_core::{
    central_axis_report, compose_chain, decompose_two_applied, exp, inertia_of, log,
    momentum_screw, reciprocal_subspace, BodyState, Frame, InertiaOperator, MotionChain, Point,
    StepDiagnostics, Twist,
};

use crate::report::{
    axis_json, pitch_json, point_json, render, render_line, screw_json, vec_json, Format,
};
use crate::scene::{RigidMapSpec, SceneFile, SCENE_VERSION};
use crate::selfcheck::run_checks;
use crate::CliError;

pub fn reduce(scene: &SceneFile) -> Result<Value, CliError> {
    let fs = scene.force_system()?;
    let rep = central_axis_report(&fs);
    let pair = decompose_two_applied(&rep.wrench.0)?;
    let leg = |a: &screw_core::AppliedVector| json!({ "point": point_json(a.point), "vector": vec_json(a.vector) });
    Ok(json!({
        "wrench": screw_json(&rep.wrench.0),
        "axis": axis_json(&rep.axis),
        "pitch": pitch_json(&rep.pitch),
        "invariant": vec_json(rep.invariant),
        "resultant": vec_json(rep.resultant),
        "two_applied": [leg(&pair.first), leg(&pair.second)],
    }))
}

pub fn compose(scene: &SceneFile) -> Result<Value, CliError> {
    let chain = MotionChain::new(scene.twist_list()?)?;
    let k = compose_chain(&chain);
    let s = k.screw();
    Ok(json!({
        "twist": screw_json(s),
        "omega": vec_json(k.angular_velocity()),
        "axis": axis_json(&s.axis()),
        "pitch": pitch_json(&s.pitch()),
        "velocity_along_axis": vec_json(s.vector_invariant()),
        "translation_speed": s.vector_invariant().norm(),
    }))
}

/// The report is itself a scene holding the resulting rigid map, so it can
/// be handed straight to `log`.
pub fn exp_map(scene: &SceneFile, t: f64) -> Result<Value, CliError> {
    let twists = scene.twist_list()?;
    let [k] = twists.as_slice() else {
        return Err(CliError::Malformed(format!(
            "twists: exp needs exactly one twist, found {}",
            twists.len()
        )));
    };
    if !t.is_finite() {
        return Err(CliError::Malformed(format!(
            "--t: must be finite, found {t}"
        )));
    }
    let g = exp(k.screw(), t);
    Ok(json!({
        "version": SCENE_VERSION,
        "rigid_map": serde_json::to_value(RigidMapSpec::from(&g)).expect("map serializes"),
    }))
}

pub fn log_map(scene: &SceneFile) -> Result<Value, CliError> {
    let g = scene.rigid_map()?;
    let c = log(&g)?;
    let s = c.screw();
    Ok(json!({
        "angle": c.angle,
        "slide": c.slide,
        "axis": axis_json(&c.axis),
        "pure_translation": c.pure_translation.map(vec_json),
        "screw": screw_json(&s),
        "pitch": pitch_json(&s.pitch()),
    }))
}

pub fn reciprocal(scene: &SceneFile) -> Result<Value, CliError> {
    let w: Vec<_> = scene.twist_list()?.iter().map(|k| *k.screw()).collect();
    let z = reciprocal_subspace(&w, &Frame::IDENTITY);
    Ok(json!({
        "dimension": z.len(),
        "basis": z.iter().map(screw_json).collect::<Vec<_>>(),
    }))
}

pub fn selfcheck(seed: u64) -> (Value, bool) {
    let checks = run_checks(seed);
    let ok = checks.iter().all(|c| c.passed());
    let v = json!({
        "seed": seed,
        "pass": ok,
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    (v, ok)
}

/// Initial state: the composed twists when given, else the particle
/// velocities when every mass has one, else rest.
fn initial_state(scene: &SceneFile) -> Result<BodyState, CliError> {
    let md = scene.mass_distribution()?;
    let inertia = inertia_of(&md);
    if scene.twists.is_some() {
        let k = compose_chain(&MotionChain::new(scene.twist_list()?)?);
        return Ok(BodyState::from_twist(&inertia, &k)?);
    }
    if md.particles().iter().all(|p| p.velocity.is_some()) {
        let l = momentum_screw(&md)?;
        let body = InertiaOperator {
            center: Point::ORIGIN,
            ..inertia
        };
        return Ok(BodyState::new(
            body,
            screw_core::Mat3::IDENTITY,
            inertia.center,
            l.linear_momentum(),
            l.angular_momentum_at(inertia.center),
        )?);
    }
    Ok(BodyState::from_twist(&inertia, &Twist::ZERO)?)
}

/// State after step `n`, with the diagnostics of that step.
fn step_record(n: usize, dt: f64, state: &BodyState, d: &StepDiagnostics) -> Value {
    json!({
        "step": n,
        "time": d.time + dt,
        "kinetic_energy": d.kinetic_energy,
        "energy_rate": d.energy_rate,
        "power": d.power,
        "inertia_rate": d.inertia_rate,
        "moving_frame_residual": d.moving_frame_residual,
        "center": point_json(state.center),
        "angular_momentum": vec_json(state.angular_momentum),
    })
}

/// Streams one record per `every` steps, then a summary.
pub fn simulate(
    scene: &SceneFile,
    every: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let config = scene.sim_config()?;
    let initial = initial_state(scene)?;
    let every = every.max(1);
    let mut io_result = Ok(());
    let mut worst = [0.0_f64; 3];
    let mut n = 0;
    let last = screw_core::sim::run_streaming(&config, &initial, |state, d| {
        n += 1;
        worst[0] = worst[0].max(d.inertia_rate.abs());
        worst[1] = worst[1].max((d.energy_rate - d.power).abs());
        worst[2] = worst[2].max(d.moving_frame_residual);
        if io_result.is_ok() && (n % every == 0 || n == config.steps) {
            io_result =
                out.write_all(render_line(&step_record(n, config.dt, state, d), format).as_bytes());
        }
    })?;
    io_result?;
    let t0 = initial.kinetic_energy()?;
    let t1 = last.kinetic_energy()?;
    let summary = json!({
        "summary": {
            "steps": config.steps,
            "final_time": config.steps as f64 * config.dt,
            "kinetic_energy_change": t1 - t0,
            "linear_momentum": vec_json(last.linear_momentum),
            "angular_momentum_change": vec_json(last.angular_momentum - initial.angular_momentum),
            "max_inertia_rate": worst[0],
            "max_energy_power_gap": worst[1],
            "max_moving_frame_residual": worst[2],
        }
    });
    let text = match format {
        Format::Machine => render_line(&summary, format),
        Format::Human => render(&summary, format),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}
