use std::fmt::Write as _;

use qminor_core::suites::{Check, Value};
use serde::Serialize;
use serde_json::{Map, Value as Json};

#[derive(Debug, Serialize)]
pub struct Record {
    pub name: String,
    pub pass: bool,
    pub detail: Map<String, Json>,
}

impl Record {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Record { name: name.into(), pass, detail: Map::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Json>) -> Self {
        self.detail.insert(key.to_string(), value.into());
        self
    }
}

impl From<&Check> for Record {
    fn from(c: &Check) -> Self {
        let mut r = Record::new(c.name.clone(), c.pass);
        for (k, v) in &c.detail {
            let j = match v {
                Value::Bool(b) => Json::from(*b),
                Value::Int(i) => Json::from(*i),
                Value::Text(s) => Json::from(s.clone()),
                Value::List(l) => Json::from(l.clone()),
            };
            r.detail.insert(k.clone(), j);
        }
        r
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Json>,
    pub results: Vec<Record>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), inputs: Map::new(), results: Vec::new(), elapsed_ms: 0 }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Json>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, r: Record) {
        self.results.push(r);
    }

    pub fn extend_checks(&mut self, checks: &[Check]) {
        self.results.extend(checks.iter().map(Record::from));
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
        let _ = writeln!(out, "{} {}", self.command, inputs.join(" "));
        for r in &self.results {
            let _ = writeln!(out, "  {} {}", if r.pass { "PASS" } else { "FAIL" }, r.name);
            for (k, v) in &r.detail {
                match v {
                    Json::Array(items) if items.iter().any(Json::is_string) => {
                        let _ = writeln!(out, "      {k}:");
                        for item in items {
                            let _ = writeln!(out, "        {}", scalar(item));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "      {k}: {}", scalar(v));
                    }
                }
            }
        }
        let passed = self.results.iter().filter(|r| r.pass).count();
        let _ = write!(out, "{passed}/{} passed", self.results.len());
        if timing {
            let _ = write!(out, " in {} ms", self.elapsed_ms);
        }
        out.push('\n');
        out
    }
}

fn scalar(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Null => "none".to_string(),
        Json::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}
