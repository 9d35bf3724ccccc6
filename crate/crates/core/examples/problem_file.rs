//! Parsing a problem file and running a command on it, as the CLI does.
//!
//! Run with `cargo run --example problem_file`.

use pbwgate::cli::{parse_problem, run_command, Command, Problem, RunOptions};

const TEXT: &str = r#"{
  "name": "heisenberg-center",
  "g": {
    "dim": 3,
    "labels": ["x", "y", "z"],
    "brackets": [[0, 1, [[2, "1"]]]]
  },
  "h": { "indices": [2] },
  "modules": { "half": { "dim": 1, "action": [[["1/2"]]] } }
}"#;

fn main() -> pbwgate::Result<()> {
    let problem = Problem::build(parse_problem(TEXT)?)?;
    let opts = RunOptions { max_degree: Some(3), module: Some("half".into()) };
    for command in [Command::Alpha, Command::Extend, Command::Twisted] {
        let report = run_command(command, &problem, &opts)?;
        print!("{}", report.render());
    }
    let report = run_command(Command::Alpha, &problem, &opts)?;
    println!("{}", report.to_json());
    Ok(())
}
