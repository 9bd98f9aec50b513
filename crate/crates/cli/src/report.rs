//! The run report: one JSON value, rendered either as JSON or as indented text.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitClass {
    Ok,
    CheckFailed,
    InputError,
    NoWitnessSet,
}

impl ExitClass {
    pub fn code(self) -> u8 {
        match self {
            ExitClass::Ok => 0,
            ExitClass::CheckFailed => 1,
            ExitClass::InputError => 2,
            ExitClass::NoWitnessSet => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Failed,
}

#[derive(Debug, Clone, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stage {
    pub stage: String,
    pub status: Status,
    pub result: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Exit {
    pub code: u8,
    pub class: ExitClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    pub seed: u64,
    pub inputs: Vec<Input>,
    pub stages: Vec<Stage>,
    pub exit: Exit,
}

/// Accumulates stages while a command runs.
pub struct Run {
    report: RunReport,
}

/// Early stop: the run is over with this classification.
pub struct Halt(pub ExitClass);

impl Run {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        Self {
            report: RunReport {
                schema: SCHEMA,
                command,
                seed,
                inputs: Vec::new(),
                stages: Vec::new(),
                exit: Exit {
                    code: 0,
                    class: ExitClass::Ok,
                },
            },
        }
    }

    pub fn stage(&mut self, name: &str, status: Status, result: Value) {
        self.report.stages.push(Stage {
            stage: name.to_string(),
            status,
            result,
        });
    }

    pub fn ok(&mut self, name: &str, result: Value) {
        self.stage(name, Status::Ok, result);
    }

    /// Records a failed stage and returns the halt to propagate.
    pub fn fail(&mut self, name: &str, class: ExitClass, result: Value) -> Halt {
        self.stage(name, Status::Failed, result);
        Halt(class)
    }

    pub fn input_error(&mut self, name: &str, err: impl std::fmt::Display) -> Halt {
        self.fail(name, ExitClass::InputError, serde_json::json!({ "error": err.to_string() }))
    }

    /// Reads a file, recording its digest.
    pub fn read(&mut self, path: &Path) -> Result<String, Halt> {
        let display = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|e| self.input_error("read", format!("{display}: {e}")))?;
        let digest = Sha256::digest(&bytes);
        self.report.inputs.push(Input {
            path: display.clone(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        });
        String::from_utf8(bytes).map_err(|e| self.input_error("read", format!("{display}: {e}")))
    }

    pub fn finish(mut self, class: ExitClass) -> RunReport {
        self.report.exit = Exit {
            code: class.code(),
            class,
        };
        self.report
    }
}

pub fn to_json(report: &RunReport) -> String {
    serde_json::to_string_pretty(report).expect("report is plain data")
}

/// Text form of the same JSON value.
pub fn to_text(report: &RunReport) -> String {
    let value = serde_json::to_value(report).expect("report is plain data");
    let mut out = String::new();
    render_map(value.as_object().expect("report is an object"), 0, &mut out);
    out
}

fn is_leaf(v: &Value) -> bool {
    !v.is_object() && !v.is_array()
}

/// Leaves and arrays of leaves print on one line.
fn is_flat(v: &Value) -> bool {
    is_leaf(v) || v.as_array().is_some_and(|a| a.iter().all(is_leaf))
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(is_flat) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_map(map: &Map<String, Value>, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (key, value) in map {
        match scalar(value) {
            Some(s) => writeln!(out, "{pad}{key}: {s}").unwrap(),
            None => {
                writeln!(out, "{pad}{key}:").unwrap();
                render_value(value, depth + 1, out);
            }
        }
    }
}

fn render_value(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => render_map(map, depth, out),
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        // first line of the nested block goes on the dash
                        let mut block = String::new();
                        render_value(item, depth + 1, &mut block);
                        let inner = "  ".repeat(depth + 1);
                        out.push_str(&pad);
                        out.push_str("- ");
                        out.push_str(block.strip_prefix(inner.as_str()).unwrap_or(&block));
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}
