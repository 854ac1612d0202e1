//! Shared report types and deterministic number formatting.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::exactmath::{Cx, Rational};

pub const SCHEMA: &str = "euler-pencil/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Fail => 1,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

/// One command's output: echo, inputs, payload, verdict and tolerances.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub tolerances: BTreeMap<String, Value>,
    pub result: Value,
}

impl Report {
    pub fn new(command: &str, status: Status, result: Value) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            params: BTreeMap::new(),
            status,
            tolerances: BTreeMap::new(),
            result,
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn tol(mut self, key: &str, v: f64) -> Self {
        self.tolerances.insert(key.to_string(), num12(v));
        self
    }
}

/// `%.12g`: 12 significant digits, trailing zeros trimmed, exponent form outside
/// `1e-5 <= |x| < 1e12`.
pub fn fmt_g12(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').unwrap_or((&sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    if !(-5..12).contains(&exp) {
        let m = trim_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x))
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// A JSON number rounded to 12 significant digits.
pub fn num12(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(fmt_g12(x));
    }
    let rounded: f64 = fmt_g12(x).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
}

/// `{"re": .., "im": ..}` at 12 significant digits.
pub fn cx12(z: Cx) -> Value {
    serde_json::json!({ "re": num12(z.re), "im": num12(z.im) })
}

/// Complex number as text, `a+bi` with 12 significant digits per part.
pub fn fmt_cx(z: Cx) -> String {
    if z.im == 0.0 {
        return fmt_g12(z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_g12(z.re), sign, fmt_g12(z.im.abs()))
}

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}
