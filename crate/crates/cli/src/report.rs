use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use treezeta_core::algebra::IntPoly;
use treezeta_core::{BigRational, Complex64};

use crate::args::Format;

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NonConverged,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::NonConverged => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NonConverged => "non-converged",
        }
    }
}

/// Machine-readable result of one command. Field order is alphabetical and
/// all nested objects are sorted maps, so re-serializing parsed output
/// reproduces it byte for byte.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

/// Row view of a report for csv, latex and text output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub struct Output {
    pub report: Report,
    pub table: Table,
    /// Rows for latex output when they differ from the table.
    pub latex: Option<Vec<String>>,
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn fmt_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Coefficients low to high as decimal strings.
pub fn poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn rational(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn render(out: &Output, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(&out.report)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.table.header).map_err(|e| e.to_string())?;
            for row in &out.table.rows {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Latex => {
            let mut s = String::new();
            match &out.latex {
                Some(rows) => {
                    for r in rows {
                        let _ = writeln!(s, "{r} \\\\");
                    }
                }
                None => {
                    let _ = writeln!(s, "{} \\\\ \\hline", out.table.header.join(" & "));
                    for r in &out.table.rows {
                        let _ = writeln!(s, "{} \\\\", r.join(" & "));
                    }
                }
            }
            Ok(s)
        }
        Format::Text => Ok(text(out)),
    }
}

fn text(out: &Output) -> String {
    let t = &out.table;
    let cols = t.header.len();
    let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", out.report.command, out.report.status.as_str());
    let line = |cells: &[String]| {
        let mut l = String::new();
        for (i, cell) in cells.iter().enumerate().take(cols) {
            if i + 1 == cols {
                l.push_str(cell);
            } else {
                let pad = widths[i] - cell.chars().count();
                l.push_str(cell);
                l.push_str(&" ".repeat(pad + 2));
            }
        }
        l
    };
    let _ = writeln!(s, "{}", line(&t.header));
    for r in &t.rows {
        let _ = writeln!(s, "{}", line(r));
    }
    if let Some(timings) = &out.report.timings {
        for (k, v) in timings {
            let _ = writeln!(s, "{k}: {v:.3}");
        }
    }
    s
}
