//! Prime sweeps: delta series, Sato-Tate diagnostics, bulk counts, accumulation.

use euler_pencil::report::{Report, Status};
use euler_pencil::stats::{accumulation_means, bulk_count, delta_p_series, sato_tate_report, sqrt_x_transfer};
use serde_json::{json, to_value};

use crate::args::{at, integers, usage, CliResult, CurveArgs};
use crate::output::{g, Out};

fn label(c: &euler_pencil::WeierstrassCurve) -> String {
    c.label().map(str::to_string).unwrap_or_else(|| c.equation())
}

pub fn delta_series(curve: &CurveArgs, x: u64) -> CliResult<Out> {
    let c = curve.resolve()?;
    let s = at("--x", delta_p_series(&c, x))?;
    let rows = s
        .rows
        .iter()
        .map(|r| vec![r.p.to_string(), r.a_p.to_string(), g(r.w_plus), g(r.u), g(r.lambda), g(r.delta), r.class.as_str().into()])
        .collect();
    let status = Status::from_bool(s.all_bounds_ok());
    let report = Report::new("delta-series", status, to_value(&s).expect("serialisable")).param("curve", label(&c)).param("x", x);
    Ok(Out::new(report, &["p", "a_p", "w_plus", "u", "lambda", "delta", "class"], rows))
}

pub fn sato_tate(curve: &CurveArgs, x: u64) -> CliResult<Out> {
    let c = curve.resolve()?;
    let s = at("--x", delta_p_series(&c, x))?;
    let st = sato_tate_report(&s, c.j());
    let mut rows: Vec<Vec<String>> = st.histogram.iter().map(|b| vec![g(b.lo), g(b.hi), b.count.to_string()]).collect();
    rows.push(vec!["inert_fraction".into(), g(st.inert_fraction), String::new()]);
    rows.push(vec!["ks_distance".into(), g(st.split_ks_distance), String::new()]);
    for w in &st.warnings {
        eprintln!("warning: {w}");
    }
    let report = Report::new("sato-tate", Status::Info, to_value(&st).expect("serialisable")).param("curve", label(&c)).param("x", x);
    Ok(Out::new(report, &["lo", "hi", "count"], rows))
}

pub fn bulk(curve: &CurveArgs, x: u64, eps: f64) -> CliResult<Out> {
    let c = curve.resolve()?;
    let s = at("--x", delta_p_series(&c, x))?;
    let b = at("--eps", bulk_count(&s, eps))?;
    let report = Report::new("bulk", Status::Info, to_value(&b).expect("serialisable")).param("curve", label(&c)).param("x", x).param("eps", eps);
    let pairs = vec![
        ("n_delta", b.n_delta.to_string()),
        ("pi_x", b.pi_x.to_string()),
        ("ratio", g(b.ratio)),
        ("expected", g(b.expected)),
    ];
    Ok(Out::kv(report, pairs))
}

pub fn accumulate(curve: &CurveArgs, xs: &str) -> CliResult<Out> {
    let c = curve.resolve()?;
    let xs = integers("--xs", xs)?;
    if xs.is_empty() || xs.iter().any(|&x| x < 10) {
        return Err(usage("--xs", "cutoffs must be at least 10"));
    }
    let pts = at("--xs", accumulation_means(&c, &xs))?;
    let transfer = sqrt_x_transfer(&pts);
    let rows = pts.iter().map(|p| vec![p.x.to_string(), g(p.u_bar), g(p.lambda_bar), g(p.dev)]).collect();
    let result = json!({
        "points": pts,
        "K": transfer.map(|t| t.0),
        "sqrt_x_bound_ok": transfer.map(|t| t.1),
    });
    let report = Report::new("accumulate", Status::Info, result).param("curve", label(&c)).param("xs", json!(xs));
    Ok(Out::new(report, &["x", "u_bar", "lambda_bar", "dev"], rows))
}
