use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use pbwgate::cli::{catalog_get, catalog_list, read_problem, run_command, Command, Problem, RunOptions};
use pbwgate::Error;

/// Exact checks of PBW-type splittings for Lie algebra inclusions h ⊂ g.
#[derive(Parser, Debug)]
#[command(name = "pbwgate", version)]
struct Args {
    /// validate, alpha, extend, split, oracle, twisted, koszul or all
    command: String,
    /// Problem file (JSON).
    #[arg(long, conflicts_with = "example")]
    input: Option<PathBuf>,
    /// Built-in catalog entry.
    #[arg(long)]
    example: Option<String>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Module for `twisted` and `extend`: n, trivial, adjoint or a declared name.
    #[arg(long)]
    module: Option<String>,
    /// Write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Validation { .. }
            | Error::UnknownCommand(_)
            | Error::UnknownExample(_)
            | Error::MissingModule(_)
            | Error::Io(_)
    )
}

fn run(args: &Args) -> Result<bool, Error> {
    let command: Command = args.command.parse()?;
    let file = match (&args.input, &args.example) {
        (Some(path), None) => read_problem(path)?,
        (None, Some(name)) => catalog_get(name)?,
        _ => {
            return Err(Error::Validation {
                path: "arguments".into(),
                message: format!("give --input FILE or --example NAME ({})", catalog_list().join(", ")),
            })
        }
    };
    let problem = Problem::build(file)?;
    let opts = RunOptions { max_degree: args.max_degree, module: args.module.clone() };
    let report = run_command(command, &problem, &opts)?;
    print!("{}", report.render());
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json())?;
    }
    Ok(report.consistent)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if input_error(&e) { 2 } else { 1 })
        }
    }
}
