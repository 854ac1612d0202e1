//! Flag parsing and catalogue lookups; every failure names the flag involved.

use clap::{Args, ValueEnum};
use euler_pencil::exactmath::{parse_rational, Cx, Rational};
use euler_pencil::{Branch, Catalogue, PencilParams, WeierstrassCurve};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid value for {flag}: {msg}")]
    Usage { flag: &'static str, msg: String },
    #[error("{0}")]
    Lib(#[from] euler_pencil::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage(flag: &'static str, msg: impl Into<String>) -> CliError {
    CliError::Usage { flag, msg: msg.into() }
}

/// Tags a library error with the flag whose value caused it.
pub fn at<T>(flag: &'static str, r: euler_pencil::Result<T>) -> CliResult<T> {
    r.map_err(|e| usage(flag, e.to_string()))
}

pub fn rational(flag: &'static str, s: &str) -> CliResult<Rational> {
    at(flag, parse_rational(s.trim()))
}

pub fn rationals(flag: &'static str, s: &str, n: usize) -> CliResult<Vec<Rational>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(usage(flag, format!("expected {n} comma-separated values, got {}", parts.len())));
    }
    parts.iter().map(|p| rational(flag, p)).collect()
}

pub fn integers(flag: &'static str, s: &str) -> CliResult<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| usage(flag, format!("{p:?}: {e}"))))
        .collect()
}

/// `re` or `re,im`.
pub fn complex(flag: &'static str, s: &str) -> CliResult<Cx> {
    let parse = |p: &str| p.trim().parse::<f64>().map_err(|e| usage(flag, format!("{p:?}: {e}")));
    match s.split_once(',') {
        Some((re, im)) => Ok(Cx::new(parse(re)?, parse(im)?)),
        None => Ok(Cx::new(parse(s)?, 0.0)),
    }
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// Catalogue label, e.g. 256b2.
    #[arg(long)]
    pub curve: Option<String>,
    /// Inline model a1,a2,a3,a4,a6.
    #[arg(long, allow_hyphen_values = true)]
    pub model: Option<String>,
}

impl CurveArgs {
    pub fn resolve(&self) -> CliResult<WeierstrassCurve> {
        match (&self.curve, &self.model) {
            (Some(label), None) => {
                let cat = at("--curve", Catalogue::load())?;
                at("--curve", cat.curve(label))
            }
            (None, Some(m)) => {
                let a = rationals("--model", m, 5)?;
                at("--model", WeierstrassCurve::new([a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone(), a[4].clone()], None))
            }
            (Some(_), Some(_)) => Err(usage("--curve", "give either --curve or --model, not both")),
            (None, None) => Err(usage("--curve", "a curve is required (--curve LABEL or --model a1,a2,a3,a4,a6)")),
        }
    }

    pub fn resolve_opt(&self) -> CliResult<Option<WeierstrassCurve>> {
        if self.curve.is_none() && self.model.is_none() {
            return Ok(None);
        }
        self.resolve().map(Some)
    }
}

/// `tau,delta,Delta`, defaulting to the canonical pencil.
pub fn pencil(s: Option<&str>) -> CliResult<PencilParams> {
    match s {
        None => Ok(PencilParams::canonical()),
        Some(s) => {
            let v = rationals("--pencil", s, 3)?;
            Ok(PencilParams::new(v[0].clone(), v[1].clone(), v[2].clone()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
    Both,
}

impl BranchArg {
    pub fn branches(self) -> Vec<Branch> {
        match self {
            BranchArg::Plus => vec![Branch::Plus],
            BranchArg::Minus => vec![Branch::Minus],
            BranchArg::Both => vec![Branch::Plus, Branch::Minus],
        }
    }

    pub fn single(self) -> CliResult<Branch> {
        match self {
            BranchArg::Plus => Ok(Branch::Plus),
            BranchArg::Minus => Ok(Branch::Minus),
            BranchArg::Both => Err(usage("--branch", "this command needs plus or minus")),
        }
    }
}
