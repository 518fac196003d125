use std::fmt::Display;
use std::process::ExitCode;

use dualsurf_core::{Check, Error, Poly, Report, Status};
use serde_json::{json, Map, Value};

/// Everything a command produces, in emission order.
pub struct CommandResult {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl CommandResult {
    pub fn new(command: &str) -> Self {
        CommandResult {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn poly(&mut self, key: &str, value: &Poly) -> &mut Self {
        self.result(key, text(value))
    }

    pub fn polys<'a>(&mut self, entries: impl IntoIterator<Item = (&'a str, &'a Poly)>) -> &mut Self {
        for (key, value) in entries {
            self.poly(key, value);
        }
        self
    }

    pub fn report(&mut self, report: Report) -> &mut Self {
        self.checks.extend(report.checks);
        self
    }

    /// Prefixes every check name before adding it.
    pub fn report_scoped(&mut self, scope: &str, report: Report) -> &mut Self {
        self.checks.extend(report.checks.into_iter().map(|c| Check {
            name: format!("{scope}: {}", c.name),
            ..c
        }));
        self
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "status": c.status.to_string(), "lhs": c.lhs, "rhs": c.rhs}))
            .collect();
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": checks,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (key, value) in &self.results {
            flatten(&mut out, key, value);
        }
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {}: {} | {}\n", c.status, c.name, c.lhs, c.rhs));
        }
        out
    }
}

fn flatten(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(out, &format!("{key}.{k}"), v);
            }
        }
        Value::String(s) => out.push_str(&format!("{key} = {s}\n")),
        other => out.push_str(&format!("{key} = {other}\n")),
    }
}

/// Canonical text of anything displayable; integers become decimal strings.
pub fn text(value: &impl Display) -> Value {
    Value::String(value.to_string())
}

/// A failure before or while running a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Core(Error::Parse(_)) => ExitCode::from(2),
            CliError::Core(_) => ExitCode::from(3),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
