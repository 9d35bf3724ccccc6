//! Problem files, the example catalog and command dispatch.

pub mod catalog;
pub mod problem;
pub mod report;
pub mod run;

pub use catalog::{catalog_get, catalog_list};
pub use problem::{parse_problem, read_problem, serialize_problem, Problem, ProblemFile};
pub use report::{Record, Report};
pub use run::{run_command, Command, RunOptions};
