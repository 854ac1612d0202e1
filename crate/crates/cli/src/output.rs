//! Rendering of a command result as a table, CSV or versioned JSON.

use std::io::Write;

use clap::ValueEnum;
use euler_pencil::report::{fmt_g12, num12, Report, Status};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A command's report together with its tabular view.
pub struct Out {
    pub report: Report,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Out {
    pub fn new(report: Report, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Out { report, headers: headers.iter().map(|s| s.to_string()).collect(), rows }
    }

    /// Two-column `key,value` view.
    pub fn kv(report: Report, pairs: Vec<(&str, String)>) -> Self {
        let rows = pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
        Out::new(report, &["key", "value"], rows)
    }

    pub fn status(&self) -> Status {
        self.report.status
    }
}

/// Rounds every floating-point number to 12 significant digits.
fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n.as_f64().map(num12).unwrap_or(Value::Number(n)),
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

pub fn render(out: &Out, format: Format) -> String {
    match format {
        Format::Json => {
            let v = round_floats(serde_json::to_value(&out.report).expect("report serialises"));
            let mut s = serde_json::to_string_pretty(&v).expect("value serialises");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.headers).expect("in-memory write");
            for r in &out.rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Table => {
            let n = out.headers.len();
            let mut width: Vec<usize> = out.headers.iter().map(|h| h.chars().count()).collect();
            for r in &out.rows {
                for (i, c) in r.iter().enumerate().take(n) {
                    width[i] = width[i].max(c.chars().count());
                }
            }
            let line = |cells: &[String]| -> String {
                let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = width[i])).collect();
                parts.join("  ").trim_end().to_string()
            };
            let mut s = String::new();
            s.push_str(&line(&out.headers));
            s.push('\n');
            s.push_str(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
            s.push('\n');
            for r in &out.rows {
                s.push_str(&line(r));
                s.push('\n');
            }
            s.push_str(&format!("status: {}\n", out.report.status.as_str()));
            s
        }
    }
}

pub fn emit(out: &Out, format: Format) {
    let text = render(out, format);
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = stdout.write_all(text.as_bytes());
}

pub fn g(x: f64) -> String {
    fmt_g12(x)
}
