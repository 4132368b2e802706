//! Command-line front end for `screw-core`.
//!
//! ```text
//! screw [--json] reduce <scene>
//! screw [--json] compose <scene>
//! screw [--json] exp <scene> --t <real>
//! screw [--json] log <scene>
//! screw [--json] reciprocal <scene>
//! screw [--json] simulate <scene> [--every N]
//! screw [--json] selfcheck [--seed N]
//! ```
//!
//! Exit codes: 0 success, 1 failed self-check or output error,
//! 2 malformed input, 3 domain error (the error name is printed).

pub mod commands;
pub mod report;
pub mod scene;
pub mod selfcheck;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use report::{render, Format};
use scene::SceneFile;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("domain error: {}", .0.name())]
    Domain(#[from] screw_core::Error),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "screw",
    version,
    about = "Screw algebra and rigid-body mechanics on scene files"
)]
struct Cli {
    /// Machine-readable JSON output (12 significant digits).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Central axis of the forces and an equivalent pair of applied vectors.
    Reduce { scene: PathBuf },
    /// Sum of the twists of a motion chain.
    Compose { scene: PathBuf },
    /// Rigid map obtained by following the single twist for time t.
    Exp {
        scene: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        t: f64,
    },
    /// Chasles decomposition of the rigid map.
    Log { scene: PathBuf },
    /// Basis of the screws reciprocal to the twists.
    Reciprocal { scene: PathBuf },
    /// Fixed-step simulation of the rigid body, streaming diagnostics.
    Simulate {
        scene: PathBuf,
        /// Emit every N-th step.
        #[arg(long, default_value_t = 1)]
        every: usize,
    },
    /// Checks the Lie-algebra identities on random screws.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load(path: &Path) -> Result<SceneFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    log::debug!("loaded scene {} ({} bytes)", path.display(), text.len());
    SceneFile::parse(&text).map_err(|e| match e {
        CliError::Malformed(m) => CliError::Malformed(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = if cli.json {
        Format::Machine
    } else {
        Format::Human
    };
    let report = match cli.command {
        Command::Reduce { scene } => commands::reduce(&load(&scene)?)?,
        Command::Compose { scene } => commands::compose(&load(&scene)?)?,
        Command::Exp { scene, t } => commands::exp_map(&load(&scene)?, t)?,
        Command::Log { scene } => commands::log_map(&load(&scene)?)?,
        Command::Reciprocal { scene } => commands::reciprocal(&load(&scene)?)?,
        Command::Simulate { scene, every } => {
            commands::simulate(&load(&scene)?, every, format, out)?;
            return Ok(0);
        }
        Command::Selfcheck { seed } => {
            let (v, ok) = commands::selfcheck(seed);
            out.write_all(render(&v, format).as_bytes())?;
            return Ok(if ok { 0 } else { 1 });
        }
    };
    out.write_all(render(&report, format).as_bytes())?;
    Ok(0)
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
