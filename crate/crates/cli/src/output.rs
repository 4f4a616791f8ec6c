use std::io::{self, Write};

use ferrers_core::shapes::SkewShape;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{CommandKind, Format};

/// Per-shape outcome, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Skipped,
    Failed,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Skipped => "skipped",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ShapeResult {
    pub shape: SkewShape,
    pub status: Status,
    pub summary: String,
    pub details: Value,
}

#[derive(Debug)]
pub struct Report {
    pub command: CommandKind,
    pub results: Vec<ShapeResult>,
    pub exit_code: u8,
}

impl Report {
    pub fn new(command: CommandKind, results: Vec<ShapeResult>) -> Self {
        let worst = results.iter().map(|r| r.status).max().unwrap_or(Status::Ok);
        let exit_code = match worst {
            Status::Ok | Status::Skipped => 0,
            Status::Failed => 1,
            Status::Error => 2,
        };
        Report {
            command,
            results,
            exit_code,
        }
    }

    fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn verdict(&self) -> &'static str {
        match self.exit_code {
            0 => "pass",
            1 => "fail",
            _ => "error",
        }
    }

    fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} shapes: {} ok, {} failed, {} skipped, {} errors)",
            self.command.name(),
            self.verdict(),
            self.results.len(),
            self.count(Status::Ok),
            self.count(Status::Failed),
            self.count(Status::Skipped),
            self.count(Status::Error)
        )
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "shape": r.shape,
                    "status": r.status,
                    "summary": r.summary,
                    "details": r.details,
                })
            })
            .collect();
        json!({
            "command": self.command.name(),
            "verdict": self.verdict(),
            "exit_code": self.exit_code,
            "counts": {
                "total": self.results.len(),
                "ok": self.count(Status::Ok),
                "failed": self.count(Status::Failed),
                "skipped": self.count(Status::Skipped),
                "error": self.count(Status::Error),
            },
            "results": results,
        })
    }
}

pub fn render(report: &Report, format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&report.to_json()).map_err(|e| e.to_string())?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let row_err = |e: csv::Error| e.to_string();
            w.write_record(["command", "shape", "status", "summary"])
                .map_err(row_err)?;
            for r in &report.results {
                w.write_record([
                    report.command.name(),
                    &r.shape.to_string(),
                    r.status.as_str(),
                    &r.summary,
                ])
                .map_err(row_err)?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.results {
                s.push_str(&format!(
                    "{} {} {}\n",
                    r.shape,
                    r.status.as_str(),
                    r.summary
                ));
            }
            s.push_str(&report.summary_line());
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn emit(report: &Report, format: Format) -> Result<(), String> {
    let text = render(report, format)?;
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())
}
