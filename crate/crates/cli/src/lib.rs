//! Command-line front end: argument validation, dispatch, CSV/JSON output
//! and the verification suites.

pub mod artifact;
pub mod commands;
pub mod config;
pub mod error;
pub mod par;
pub mod table;
pub mod verify;

pub use artifact::{Artifact, Cell};
pub use commands::{run, Outcome};
pub use config::{Command, OutputFormat, RunConfig, ZEROS_TOL_ENV};
pub use error::CliError;

use std::io::Write;

fn emit(config: &RunConfig, outcome: &Outcome, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match config.format {
        OutputFormat::Csv => outcome.artifact.write_csv(&mut buf)?,
        OutputFormat::Json => outcome.artifact.write_json(&mut buf)?,
    }
    match &config.out {
        Some(path) => std::fs::write(path, &buf)?,
        None => stdout.write_all(&buf)?,
    }
    Ok(())
}

/// Full program behaviour; returns the process exit code.
pub fn execute<I, T>(args: I, env_tol: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let result = RunConfig::parse(args, env_tol).and_then(|config| {
        let outcome = run(&config)?;
        emit(&config, &outcome, stdout)?;
        Ok(outcome.ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(stderr, "crr: one or more checks failed");
            1
        }
        Err(CliError::Info(text)) => {
            let _ = write!(stdout, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "crr: {e}");
            e.exit_code()
        }
    }
}
