#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cli(args: &[&str]) -> Output {
    let mut argv = vec!["screw"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = screw_cli::run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).expect("utf-8 stdout"),
        stderr: String::from_utf8(err).expect("utf-8 stderr"),
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn scene_path(name: &str) -> String {
    golden_dir()
        .join("scenes")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// (expected-output file, scene, extra arguments after the scene).
pub struct GoldenCase {
    pub output: &'static str,
    pub command: &'static str,
    pub scene: &'static str,
    pub extra: &'static [&'static str],
    pub json: bool,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        output: "reduce_single_force.json",
        command: "reduce",
        scene: "single_force.json",
        extra: &[],
        json: true,
    },
    GoldenCase {
        output: "reduce_single_force.txt",
        command: "reduce",
        scene: "single_force.json",
        extra: &[],
        json: false,
    },
    GoldenCase {
        output: "reduce_general_forces.json",
        command: "reduce",
        scene: "general_forces.json",
        extra: &[],
        json: true,
    },
    GoldenCase {
        output: "compose_parallel_rotations.json",
        command: "compose",
        scene: "parallel_rotations.json",
        extra: &[],
        json: true,
    },
    GoldenCase {
        output: "compose_parallel_rotations.txt",
        command: "compose",
        scene: "parallel_rotations.json",
        extra: &[],
        json: false,
    },
    GoldenCase {
        output: "exp_screw_motion.json",
        command: "exp",
        scene: "screw_motion.json",
        extra: &["--t", "0.75"],
        json: true,
    },
    GoldenCase {
        output: "log_screw_motion.json",
        command: "log",
        scene: "screw_motion.json",
        extra: &[],
        json: true,
    },
    GoldenCase {
        output: "reciprocal_constraint_twists.json",
        command: "reciprocal",
        scene: "constraint_twists.json",
        extra: &[],
        json: true,
    },
];

impl GoldenCase {
    pub fn run(&self) -> Output {
        let scene = scene_path(self.scene);
        let mut args: Vec<&str> = Vec::new();
        if self.json {
            args.push("--json");
        }
        args.push(self.command);
        args.push(&scene);
        args.extend_from_slice(self.extra);
        cli(&args)
    }

    pub fn expected_path(&self) -> PathBuf {
        golden_dir().join("expected").join(self.output)
    }
}

/// Checks every golden case; with `SCREW_BLESS=1` rewrites the expected
/// files instead. Returns the names of the mismatching cases.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("SCREW_BLESS").is_some_and(|v| v == "1");
    let mut failures = Vec::new();
    for case in GOLDEN_CASES {
        let out = case.run();
        if out.code != 0 {
            failures.push(format!(
                "{}: exit {} ({})",
                case.output,
                out.code,
                out.stderr.trim()
            ));
            continue;
        }
        let path = case.expected_path();
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        match std::fs::read(&path) {
            Ok(bytes) if bytes == out.stdout.as_bytes() => {}
            Ok(_) => failures.push(format!("{}: output differs", case.output)),
            Err(e) => failures.push(format!("{}: {e}", case.output)),
        }
    }
    failures
}
