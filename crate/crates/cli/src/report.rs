use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "oldoind.report/1";

/// How the process should exit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    Error,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
            Outcome::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    /// graph6 of the input graph, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub outcome: Option<Outcome>,
    /// Plain text printed instead of the summary in text mode (graph6
    /// output of generators).
    #[serde(skip)]
    pub primary: Option<String>,
}

impl Report {
    pub fn new(command: &str, verdict: &str, outcome: Outcome) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            input: None,
            verdict: verdict.to_string(),
            witness: None,
            details: Value::Null,
            nodes_explored: None,
            warnings: Vec::new(),
            timing_ms: None,
            outcome: Some(outcome),
            primary: None,
        }
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome.unwrap_or(Outcome::Yes)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human rendering of the JSON fields.
    pub fn to_text(&self) -> String {
        if let Some(p) = &self.primary {
            return format!("{p}\n");
        }
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.command, self.verdict);
        if let Some(g) = &self.input {
            let _ = writeln!(s, "input: {g}");
        }
        if let Some(w) = &self.witness {
            let list: Vec<String> = w.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "witness: {{{}}}", list.join(","));
        }
        if let Some(n) = self.nodes_explored {
            let _ = writeln!(s, "nodes explored: {n}");
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                let _ = writeln!(s, "{k}: {}", compact(v));
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t:.3} ms");
        }
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
