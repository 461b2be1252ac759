use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use quiverdt_cli::{parse_tasks, render, run, Bound, Format, JobSpec, Status};

/// Motivic DT invariants of a quiver from its adjacency matrix.
#[derive(Parser, Debug)]
#[command(name = "quiverdt", version)]
struct Args {
    /// JSON job file: {"matrix": [[...]], "bound": [...] | {"total": N}, "tasks": [...]}
    input: PathBuf,

    /// Replace the file's bound: `2,3` for a box, `total:4` for a total degree.
    #[arg(long, value_name = "BOUND")]
    bound_override: Option<Bound>,

    #[arg(long, default_value = "json", value_parser = ["json", "tsv"])]
    format: String,

    /// Exit with status 3 if a normalized invariant of a symmetric matrix
    /// is not in N[y].
    #[arg(long)]
    strict: bool,

    /// Comma-separated tasks, replacing those in the file.
    #[arg(long, value_name = "a,b,c")]
    tasks: Option<String>,
}

fn fail(msg: impl std::fmt::Display, status: Status) -> ExitCode {
    eprintln!("quiverdt: {msg}");
    ExitCode::from(status as u8)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(Status::InvalidInput as u8);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            return fail(
                format!("{}: {e}", args.input.display()),
                Status::InvalidInput,
            )
        }
    };
    let mut job = match JobSpec::from_json(&text) {
        Ok(j) => j,
        Err(e) => return fail(e, Status::InvalidInput),
    };
    if let Some(b) = args.bound_override {
        job.bound = b;
    }
    if let Some(t) = &args.tasks {
        match parse_tasks(t) {
            Ok(tasks) => job.tasks = tasks,
            Err(e) => return fail(e, Status::InvalidInput),
        }
    }
    job.format = args
        .format
        .parse::<Format>()
        .expect("clap restricts the values");
    job.strict = args.strict;

    let report = match run(&job) {
        Ok(r) => r,
        Err(e) if e.is_consistency_failure() => return fail(e, Status::Consistency),
        Err(e) => return fail(e, Status::InvalidInput),
    };
    for d in &report.diagnostics {
        eprintln!("quiverdt: {d}");
    }
    let mut out = std::io::stdout().lock();
    if out
        .write_all(render(&report, job.format).as_bytes())
        .is_err()
    {
        return ExitCode::from(Status::InvalidInput as u8);
    }
    ExitCode::from(report.status as u8)
}
