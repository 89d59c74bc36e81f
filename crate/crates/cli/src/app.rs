// SPDX-License-Identifier: Apache-2.0

//! Argument handling and exit codes: 0 success, 1 input error, 2 failed
//! cross-check, 3 resource guard.

use std::io::Write;
use std::path::{Path, PathBuf};

use blanchfield_core::linalg::DEFAULT_MAX_DIM;
use blanchfield_core::Error;
use clap::{Parser, Subcommand};

use crate::analyzer::{Analyzer, Engine};
use crate::format::{parse_module, parse_surgery, InputError, ModuleFile};
use crate::report::ClassView;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "blanchfield", version, about = "Holonomy quotients of Blanchfield modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-class dimensions, criteria and bounds.
    Analyze {
        module: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        /// Run the self-test and include its results.
        #[arg(long)]
        check: bool,
        /// Table view: sorted classes, or dim A over every ordered class.
        #[arg(long, value_enum, default_value = "sorted")]
        classes: ClassView,
    },
    /// Change of the triple-intersection family under a surgery.
    Variation {
        module: PathBuf,
        surgery: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Cross-checks between independent routes; exit 2 on any failure.
    Selftest {
        module: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
}

enum Failure {
    Input(String),
    Guard(String),
    Check(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn engine_failure(context: &str, e: Error) -> Failure {
    match e {
        Error::ResourceGuard { .. } => Failure::Guard(format!("{context}: {e}")),
        Error::Internal(_) => Failure::Check(format!("{context}: {e}")),
        other => Failure::Input(format!("{context}: {other}")),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_module(path: &Path) -> Result<ModuleFile, Failure> {
    Ok(parse_module(&path.display().to_string(), &read(path)?)?)
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn execute(cmd: Command, engine: Engine, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Analyze { module, report, max_dim, check, classes } => {
            let file = load_module(&module)?;
            let analyzer = Analyzer::with_engine(max_dim, engine);
            let mut r = analyzer.report(&file.name, &file.module).map_err(|e| engine_failure(&file.name, e))?;
            if check {
                r.checks = analyzer.selftest(&file.module).map_err(|e| engine_failure(&file.name, e))?;
            }
            let _ = write!(out, "{}", r.table(classes));
            if let Some(p) = report {
                write_json(&p, &r)?;
            }
            Ok(if r.checks.values().all(|&ok| ok) { EXIT_OK } else { EXIT_CHECK })
        }
        Command::Variation { module, surgery, report, max_dim } => {
            let file = load_module(&module)?;
            let s = parse_surgery(&surgery.display().to_string(), &read(&surgery)?, &file.module)?;
            let analyzer = Analyzer::with_engine(max_dim, engine);
            let r = analyzer.variation(&file.name, &file.module, &s).map_err(|e| engine_failure(&file.name, e))?;
            let _ = write!(out, "{}", r.table());
            if let Some(p) = report {
                write_json(&p, &r)?;
            }
            Ok(EXIT_OK)
        }
        Command::Selftest { module, max_dim } => {
            let file = load_module(&module)?;
            let analyzer = Analyzer::with_engine(max_dim, engine);
            let checks = analyzer.selftest(&file.module).map_err(|e| engine_failure(&file.name, e))?;
            let mut all = true;
            for (k, ok) in &checks {
                all &= ok;
                let _ = writeln!(out, "{} {k}", if *ok { "pass" } else { "FAIL" });
            }
            if !all {
                return Err(Failure::Check(format!("{}: cross-check failed", file.name)));
            }
            let _ = writeln!(out, "selftest passed: {} checks", checks.len());
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line with the given engine; returns the exit code.
pub fn run<I, T>(args: I, engine: Engine, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, engine, out) {
        Ok(code) => code,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "cross-check failure: {m}");
            EXIT_CHECK
        }
        Err(Failure::Guard(m)) => {
            let _ = writeln!(err, "resource guard: {m}");
            EXIT_GUARD
        }
    }
}
