//! Universality integrals, the arcsine law and `chi_-4` checks.

use clap::ValueEnum;
use euler_pencil::continuum::{
    arcsine_cdf, arcsine_closed_form, arcsine_pdf, dirichlet_l_chi4, eta_functional_equation_residual,
    printed_functional_equation_residual, universality_integral, Dispersion,
};
use euler_pencil::report::{cx12, fmt_cx, Report, Status};
use serde_json::json;

use crate::args::{at, complex, CliResult};
use crate::output::{g, Out};

const QUAD_TOL: f64 = 1e-11;
const AGREEMENT: f64 = 1e-8;
const CLOSED_FORM: f64 = 1e-7;
const SERIES_TOL: f64 = 1e-12;
const FEQ_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DispersionArg {
    Tanh,
    Algebraic,
    Both,
}

impl DispersionArg {
    fn list(self) -> Vec<Dispersion> {
        match self {
            DispersionArg::Tanh => vec![Dispersion::Tanh],
            DispersionArg::Algebraic => vec![Dispersion::Algebraic],
            DispersionArg::Both => Dispersion::ALL.to_vec(),
        }
    }
}

pub fn universality(z: &str, disp: DispersionArg, tol: Option<f64>) -> CliResult<Out> {
    let tol = tol.unwrap_or(QUAD_TOL);
    let zc = complex("--z", z)?;
    let mut rows = Vec::new();
    let mut values = Vec::new();
    let mut items = Vec::new();
    for d in disp.list() {
        let q = at("--z", universality_integral(d, zc, tol))?;
        rows.push(vec![d.as_str().into(), fmt_cx(q.value), g(q.estimated_error), q.evaluations.to_string()]);
        items.push(json!({ "dispersion": d.as_str(), "value": cx12(q.value), "estimated_error": q.estimated_error, "evaluations": q.evaluations }));
        values.push(q.value);
    }
    let spread = values.iter().map(|v| (v - values[0]).norm()).fold(0.0, f64::max);
    // The closed form is the limit only to the right of the cut.
    let closed = at("--z", arcsine_closed_form(zc))?;
    let closed_applies = zc.re > 1.0;
    let closed_gap = values.iter().map(|v| (v - closed).norm()).fold(0.0, f64::max);
    let mut checks = Vec::new();
    if values.len() > 1 {
        checks.push(spread <= AGREEMENT);
    }
    if closed_applies {
        checks.push(closed_gap <= CLOSED_FORM);
    }
    let status = if checks.is_empty() { Status::Info } else { Status::from_bool(checks.iter().all(|&b| b)) };
    rows.push(vec!["closed-form".into(), fmt_cx(closed), "-".into(), "-".into()]);
    let result = json!({
        "integrals": items,
        "dispersion_spread": spread,
        "closed_form": cx12(closed),
        "closed_form_gap": closed_gap,
        "closed_form_checked": closed_applies,
    });
    let report = Report::new("universality", status, result)
        .param("z", cx12(zc))
        .tol("quadrature", tol)
        .tol("dispersion_agreement", AGREEMENT)
        .tol("closed_form", CLOSED_FORM);
    Ok(Out::new(report, &["dispersion", "value", "estimated_error", "evaluations"], rows))
}

pub fn arcsine(t: f64) -> CliResult<Out> {
    let pdf = at("--t", arcsine_pdf(t))?;
    let cdf = arcsine_cdf(t);
    let report = Report::new("arcsine", Status::Info, json!({ "pdf": pdf, "cdf": cdf })).param("t", t);
    Ok(Out::kv(report, vec![("pdf", g(pdf)), ("cdf", g(cdf))]))
}

pub fn chi4_l(s: f64, tol: Option<f64>) -> CliResult<Out> {
    let tol = tol.unwrap_or(SERIES_TOL);
    let l = at("--s", dirichlet_l_chi4(s, tol))?;
    let report = Report::new("chi4-L", Status::Info, serde_json::to_value(&l).expect("serialisable")).param("s", s).tol("series", tol);
    Ok(Out::kv(
        report,
        vec![("L(s, chi_-4)", g(l.value)), ("eta(s)", g(2.0 * l.value)), ("estimated_error", g(l.estimated_error)), ("terms", l.terms.to_string())],
    ))
}

pub fn eta_feq(s: f64, tol: Option<f64>) -> CliResult<Out> {
    let tol = tol.unwrap_or(FEQ_TOL);
    let r = at("--s", eta_functional_equation_residual(s))?;
    let sin_variant = at("--s", printed_functional_equation_residual(s))?;
    let report = Report::new("eta-feq", Status::from_bool(r <= tol), json!({ "residual": r, "sin_variant_residual": sin_variant }))
        .param("s", s)
        .tol("residual", tol);
    Ok(Out::kv(report, vec![("residual", g(r)), ("sin variant residual", g(sin_variant))]))
}
