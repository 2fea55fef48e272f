//! Structured report emitted by every command: human-readable text by
//! default, machine-readable JSON behind `--json`.

use deltashell::{Verdict, VerdictStatus};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<ResultItem>,
    pub verdicts: Vec<VerdictItem>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultItem {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictItem {
    pub criterion_id: String,
    pub status: String,
    pub evidence: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            verdicts: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push_result(&mut self, name: &str, value: impl Into<Value>) {
        self.results.push(ResultItem {
            name: name.to_string(),
            value: value.into(),
        });
    }

    pub fn push_count(&mut self, name: &str, value: usize) {
        self.push_result(name, Value::from(value as u64));
    }

    pub fn push_verdict(&mut self, scope: &str, verdict: &Verdict) {
        let status = match verdict.status {
            VerdictStatus::Holds => "holds",
            VerdictStatus::Fails => "fails",
            VerdictStatus::Inconclusive => "inconclusive",
        };
        self.verdicts.push(VerdictItem {
            criterion_id: format!("{scope}/{}", verdict.criterion_id),
            status: status.to_string(),
            evidence: verdict.evidence.clone(),
        });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain key/value rendering for terminals.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for item in &self.results {
            out.push_str(&format!("{}: {}\n", item.name, render_value(&item.value)));
        }
        if !self.verdicts.is_empty() {
            out.push_str("verdicts:\n");
            for v in &self.verdicts {
                out.push_str(&format!(
                    "  {:<46} {:<13} {}\n",
                    v.criterion_id, v.status, v.evidence
                ));
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
