//! The uniform result of every subcommand.

use serde_json::{json, Map, Value};

use crate::json::float;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Numeric distance from the expected value, when there is one.
    pub residual: Option<f64>,
}

impl Check {
    pub fn exact(name: impl Into<String>, ok: bool) -> Check {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            residual: None,
        }
    }

    /// Passes when `residual < tolerance`.
    pub fn within(name: impl Into<String>, residual: f64, tolerance: f64) -> Check {
        Check {
            name: name.into(),
            status: Status::from_bool(residual < tolerance),
            residual: Some(residual),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status.as_str(),
            "residual": self.residual.map(float),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            inputs: Map::new(),
            results: Value::Object(Map::new()),
            checks: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.inputs.insert(key.into(), value.into());
        self
    }

    /// Sets `results[key]`.
    pub fn set(&mut self, key: &str, value: Value) {
        if let Value::Object(m) = &mut self.results {
            m.insert(key.into(), value);
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": self.results,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }

    /// Aligned `key  value` lines for the top-level results, then the checks.
    pub fn to_table(&self) -> String {
        let mut out = format!("{}\n", self.command);
        if let Value::Object(m) = &self.results {
            let width = m.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in m {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => serde_json::to_string(other).unwrap_or_default(),
                };
                out.push_str(&format!("  {k:<width$}  {shown}\n"));
            }
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            out.push_str("checks\n");
            for c in &self.checks {
                let residual = c.residual.map(|r| format!("  {r:.3e}")).unwrap_or_default();
                out.push_str(&format!(
                    "  {:<width$}  {}{residual}\n",
                    c.name,
                    c.status.as_str().to_uppercase()
                ));
            }
        }
        out
    }
}
