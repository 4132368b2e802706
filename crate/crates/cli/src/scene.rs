//! Scene files: a single JSON document describing forces, masses, twists,
//! a rigid map and simulation settings.
//!
//! ```json
//! {
//!   "version": 1,
//!   "forces": [{ "point": [0, 0, 0], "vector": [0, 0, -9.8] }],
//!   "masses": [{ "m": 1.0, "position": [1, 0, 0], "velocity": [0, 1, 0] }],
//!   "twists": [
//!     { "omega": [0, 0, 1], "v_at": [[1, 0, 0], [0, 0, 0]] },
//!     { "omega": [0, 0, 0], "moment_at_origin": [1, 0, 0] }
//!   ],
//!   "rigid_map": { "rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1], "translation": [0, 0, 0] },
//!   "sim": { "dt": 0.001, "steps": 100, "wrench": { "resultant": [0, 0, 0], "moment_at_origin": [0, 0, 0] } }
//! }
//! ```
//!
//! Unknown keys are rejected everywhere. Every section is optional; each
//! command checks for the sections it needs.

use serde::{Deserialize, Serialize};

use screw_core::sim::WrenchSource;
use screw_core::{
    AppliedVector, ForceSystem, Integrator, MassDistribution, Particle, Point, RigidMap, Screw,
    SimConfig, Twist, Vec3, Wrench,
};

use crate::CliError;

pub const SCENE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forces: Option<Vec<ForceSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub masses: Option<Vec<MassSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twists: Option<Vec<TwistSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rigid_map: Option<RigidMapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sim: Option<SimSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForceSpec {
    pub point: [f64; 3],
    pub vector: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassSpec {
    pub m: f64,
    pub position: [f64; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub velocity: Option<[f64; 3]>,
}

/// A twist given by its angular velocity and either the velocity of one
/// named point (`v_at: [point, velocity]`) or the raw moment at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    pub omega: [f64; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_at: Option<[[f64; 3]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moment_at_origin: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RigidMapSpec {
    /// Row-major.
    pub rotation: [f64; 9],
    pub translation: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WrenchSpec {
    pub resultant: [f64; 3],
    pub moment_at_origin: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntegratorSpec {
    Midpoint,
    Euler,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimSpec {
    pub dt: f64,
    pub steps: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wrench: Option<WrenchSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrator: Option<IntegratorSpec>,
    /// Body-axes offset from the center of mass of the moving-frame probe.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<[f64; 3]>,
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

fn vec3(a: [f64; 3]) -> Vec3 {
    Vec3::from_array(a)
}

fn point(a: [f64; 3]) -> Point {
    Point::from_coords(vec3(a))
}

impl SceneFile {
    /// Parses and validates a scene. Errors carry the line and column of
    /// syntax problems, or the path of the offending field.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let scene: SceneFile =
            serde_json::from_str(text).map_err(|e| malformed(format!("scene: {e}")))?;
        scene.validate()?;
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scene serializes");
        s.push('\n');
        s
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.version != SCENE_VERSION {
            return Err(malformed(format!(
                "version: expected {SCENE_VERSION}, found {}",
                self.version
            )));
        }
        for (i, t) in self.twists.iter().flatten().enumerate() {
            if t.v_at.is_some() == t.moment_at_origin.is_some() {
                return Err(malformed(format!(
                    "twists[{i}]: exactly one of v_at or moment_at_origin is required"
                )));
            }
        }
        if let Some(sim) = &self.sim {
            if !(sim.dt.is_finite() && sim.dt > 0.0) {
                return Err(malformed(format!(
                    "sim.dt: must be positive, found {}",
                    sim.dt
                )));
            }
            if sim.steps == 0 {
                return Err(malformed("sim.steps: must be at least 1"));
            }
        }
        Ok(())
    }

    pub fn force_system(&self) -> Result<ForceSystem, CliError> {
        let forces = self.forces.as_deref().unwrap_or_default();
        if forces.is_empty() {
            return Err(malformed(
                "forces: section is required and must not be empty",
            ));
        }
        let forces = forces
            .iter()
            .map(|f| AppliedVector::new(point(f.point), vec3(f.vector)))
            .collect();
        Ok(ForceSystem::new(forces)?)
    }

    pub fn twist_list(&self) -> Result<Vec<Twist>, CliError> {
        let twists = self
            .twists
            .as_deref()
            .ok_or_else(|| malformed("twists: section is required"))?;
        Ok(twists.iter().map(TwistSpec::to_twist).collect())
    }

    pub fn rigid_map(&self) -> Result<RigidMap, CliError> {
        let spec = self
            .rigid_map
            .as_ref()
            .ok_or_else(|| malformed("rigid_map: section is required"))?;
        Ok(RigidMap::new(
            screw_core::Mat3::from_row_major(spec.rotation),
            vec3(spec.translation),
        )?)
    }

    pub fn mass_distribution(&self) -> Result<MassDistribution, CliError> {
        let masses = self
            .masses
            .as_deref()
            .ok_or_else(|| malformed("masses: section is required"))?;
        let particles = masses
            .iter()
            .map(|m| Particle {
                mass: m.m,
                position: point(m.position),
                velocity: m.velocity.map(vec3),
            })
            .collect();
        Ok(MassDistribution::new(particles)?)
    }

    pub fn sim_config(&self) -> Result<SimConfig, CliError> {
        let spec = self
            .sim
            .as_ref()
            .ok_or_else(|| malformed("sim: section is required"))?;
        let mut config = SimConfig::new(spec.dt, spec.steps)?;
        if let Some(w) = &spec.wrench {
            config.wrench = WrenchSource::Constant(Wrench(Screw::new(
                vec3(w.resultant),
                vec3(w.moment_at_origin),
            )));
        }
        config.integrator = match spec.integrator {
            Some(IntegratorSpec::Euler) => Integrator::Euler,
            Some(IntegratorSpec::Midpoint) | None => Integrator::Midpoint,
        };
        if let Some(p) = spec.probe {
            config.probe = vec3(p);
        }
        Ok(config)
    }
}

impl TwistSpec {
    pub fn to_twist(&self) -> Twist {
        let omega = vec3(self.omega);
        match (self.v_at, self.moment_at_origin) {
            (Some([p, v]), _) => Twist::from_velocity_at(point(p), omega, vec3(v)),
            (None, Some(m)) => Twist(Screw::new(omega, vec3(m))),
            (None, None) => unreachable!("validated on load"),
        }
    }
}

impl From<&RigidMap> for RigidMapSpec {
    fn from(g: &RigidMap) -> Self {
        RigidMapSpec {
            rotation: g.rotation().to_row_major(),
            translation: g.translation().to_array(),
        }
    }
}
