use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;

/// Usage or input error; always exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub type CmdResult = Result<Report, UsageError>;

/// Collected output of one command: human lines, one JSON record per check,
/// and whether any mathematical check failed.
#[derive(Default)]
pub struct Report {
    lines: Vec<String>,
    records: Vec<Value>,
    failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Human-only output, e.g. an emitted algebra or proof file.
    pub fn text(&mut self, s: impl Display) {
        self.lines.push(s.to_string());
    }

    pub fn record<T: Serialize>(&mut self, human: impl Display, rec: &T) {
        self.lines.push(human.to_string());
        self.records.push(serde_json::to_value(rec).expect("records serialize"));
    }

    /// A record whose verdict feeds the exit code.
    pub fn check<T: Serialize>(&mut self, passed: bool, human: impl Display, rec: &T) {
        self.failed |= !passed;
        self.record(human, rec);
    }

    pub fn finish(self, json: bool) -> ExitCode {
        // a closed pipe (`| head`) is not an error worth reporting
        let mut stdout = io::stdout().lock();
        let _ = if json {
            self.records.iter().try_for_each(|r| writeln!(stdout, "{r}"))
        } else {
            self.lines.iter().try_for_each(|l| writeln!(stdout, "{l}"))
        };
        if self.failed {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        }
    }
}
