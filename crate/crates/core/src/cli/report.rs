//! Check records and their human and JSON renderings.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    /// The statement the check exercises.
    pub anchor: String,
    pub verdict: String,
    pub witness: Value,
    pub millis: u64,
    /// The outcome agrees with what the theory predicts.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub problem: String,
    pub command: String,
    pub consistent: bool,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(problem: &str, command: &str) -> Self {
        Report { problem: problem.to_string(), command: command.to_string(), consistent: true, records: Vec::new() }
    }

    pub fn push(&mut self, record: Record) {
        self.consistent &= record.consistent;
        self.records.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = Record>) {
        for r in records {
            self.push(r);
        }
    }

    pub fn record(&self, check: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} / {}", self.problem, self.command);
        for r in &self.records {
            let mark = if r.consistent { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {:<28} {} ({} ms)", r.check, r.verdict, r.millis);
            let _ = writeln!(out, "         {}", r.anchor);
        }
        let _ = writeln!(out, "{}", if self.consistent { "consistent" } else { "INCONSISTENT" });
        out
    }
}

/// Runs `f` and measures its wall time in milliseconds.
pub fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = Instant::now();
    let value = f()?;
    Ok((value, start.elapsed().as_millis() as u64))
}
