//! Command-line front end: argument grammar, session setup, report
//! rendering, curve SVG export and fixture reproduction.

pub mod args;
pub mod commands;
pub mod repro;
pub mod report;
pub mod session;
pub mod svg;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

use schur_scope::Exec;

use crate::args::{Cli, Command};
use crate::report::Report;
use crate::session::{OutputMode, Session};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute(cli: &Cli, env_caps: Option<&str>) -> anyhow::Result<(Report, OutputMode)> {
    if let Command::Repro(args) = &cli.command {
        let exec = if cli.global.sequential { Exec::Sequential } else { Exec::default() };
        let mode = if cli.global.json { OutputMode::Json } else { OutputMode::Text };
        return Ok((Report::Repro(repro::run(&args.fixture, exec)?), mode));
    }
    let session = Session::from_args(&cli.global, env_caps)?;
    let report = commands::dispatch(&session, &cli.command)?;
    Ok((report, session.output))
}

pub fn render(report: &Report, mode: OutputMode) -> String {
    match mode {
        OutputMode::Text => report.to_text(),
        OutputMode::Json => report.to_json(),
    }
}

pub fn exit_code(report: &Report) -> i32 {
    match report {
        Report::Repro(r) if !r.matches => EXIT_ERROR,
        r if r.undecided() => EXIT_UNDECIDED,
        _ => EXIT_OK,
    }
}

pub fn run<I, T>(argv: I, env_caps: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli, env_caps) {
        Ok((report, mode)) => Outcome { code: exit_code(&report), stdout: render(&report, mode), stderr: String::new() },
        Err(e) => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}
