//! Basepoints, Euler-factor matching and the special operators.

use euler_pencil::curves::{ap_count, good_primes, hasse_check};
use euler_pencil::exactmath::QuadExt;
use euler_pencil::matching::{
    basepoint_solve, canonical_basepoint, cd_matching_ratio, discriminant_identity, euler_match_verify,
    golden_ratio_spectrum, interpolation_obstruction, offshell_distance, symbolic_reduction, tco_basepoint,
    zco_basepoint, zco_c_trace_invariance, zco_euler_factor, zco_matrix, zco_pinv_traces,
};
use euler_pencil::report::{cx12, fmt_cx, Report, Status};
use euler_pencil::{Basepoint, Error, MatchReport, MatchTarget, PencilParams};
use serde_json::{json, to_value, Value};

use crate::args::{at, complex, pencil as parse_pencil, rational, usage, BranchArg, CliResult, CurveArgs};
use crate::output::{g, Out};

const MATCH_TOL: f64 = 1e-9;
const ZCO_TOL: f64 = 1e-12;

fn pencil_echo(p: &PencilParams) -> Value {
    json!([p.tau.to_string(), p.delta.to_string(), p.big_delta.to_string()])
}

fn basepoint_pairs(bp: &Basepoint) -> Vec<(&'static str, String)> {
    vec![
        ("branch", bp.branch.as_str().into()),
        ("w_exact", bp.w_exact.to_string()),
        ("w", fmt_cx(bp.w)),
        ("u", fmt_cx(bp.u)),
        ("lambda", fmt_cx(bp.lambda)),
        ("sheet", to_value(bp.sheet).expect("serialisable").as_str().unwrap_or("").into()),
    ]
}

pub fn basepoint(pencil: Option<&str>, ap: i64, p: u64, branch: BranchArg) -> CliResult<Out> {
    let params = parse_pencil(pencil)?;
    if !hasse_check(ap, p) {
        return Err(usage("--ap", format!("a_p = {ap} violates the Hasse bound at p = {p}")));
    }
    let branch = branch.single()?;
    let bp = if pencil.is_none() {
        canonical_basepoint(ap, p, branch)?
    } else {
        at("--pencil", basepoint_solve(&params, ap, p, branch))?
    };
    let report = Report::new("basepoint", Status::Info, to_value(&bp).expect("serialisable"))
        .param("pencil", pencil_echo(&params))
        .param("ap", ap)
        .param("p", p)
        .param("branch", branch.as_str());
    Ok(Out::kv(report, basepoint_pairs(&bp)))
}

fn match_row(r: &MatchReport) -> Vec<String> {
    let bp = &r.basepoint;
    vec![
        r.p.to_string(),
        r.a_p.to_string(),
        bp.branch.as_str().into(),
        fmt_cx(bp.w),
        fmt_cx(bp.u),
        fmt_cx(bp.lambda),
        fmt_cx(r.trace),
        fmt_cx(r.det),
        g(r.residual_tr.max(r.residual_det).max(r.residual_p)),
        g(r.float_residual),
        if r.pass { "PASS" } else { "FAIL" }.into(),
    ]
}

#[allow(clippy::too_many_arguments)]
pub fn match_cmd(
    curve: &CurveArgs,
    pencil: Option<&str>,
    p: Option<u64>,
    ap: Option<i64>,
    max_p: Option<u64>,
    branch: BranchArg,
    tol: Option<f64>,
) -> CliResult<Out> {
    let tol = tol.unwrap_or(MATCH_TOL);
    let params = parse_pencil(pencil)?;
    let target = if pencil.is_none() { MatchTarget::Canonical } else { MatchTarget::Pencil(params.clone()) };
    let c = curve.resolve_opt()?;
    let cases: Vec<(u64, i64)> = match (p, max_p) {
        (Some(_), Some(_)) => return Err(usage("--p", "give either --p or --max-p, not both")),
        (None, None) => return Err(usage("--p", "one of --p or --max-p is required")),
        (Some(p), None) => {
            let a = match (ap, &c) {
                (Some(a), _) => a,
                (None, Some(c)) => at("--p", ap_count(c, p, false))?,
                (None, None) => return Err(usage("--ap", "a single prime needs --ap or a curve")),
            };
            vec![(p, a)]
        }
        (None, Some(max_p)) => {
            let c = c.as_ref().ok_or_else(|| usage("--curve", "a sweep with --max-p needs --curve or --model"))?;
            if ap.is_some() {
                return Err(usage("--ap", "--ap applies to a single --p only"));
            }
            let mut v = Vec::new();
            for q in good_primes(c, max_p) {
                v.push((q, ap_count(c, q, false)?));
            }
            v
        }
    };
    let mut reports = Vec::new();
    for &(q, a) in &cases {
        for b in branch.branches() {
            let r = euler_match_verify(&target, a, q, b, tol).map_err(|e| match e {
                Error::HasseViolation { .. } => usage("--ap", e.to_string()),
                Error::Domain(_) | Error::NoSolution(_) | Error::DegenerateQuadratic => usage("--pencil", e.to_string()),
                other => other.into(),
            })?;
            reports.push(r);
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let rows = reports.iter().map(match_row).collect();
    let mut report = Report::new("match", Status::from_bool(pass), json!({ "reports": reports }))
        .param("pencil", pencil_echo(&params))
        .param("branch", format!("{branch:?}").to_lowercase())
        .tol("residual", tol);
    if let Some(c) = &c {
        report = report.param("curve", c.label().map(str::to_string).unwrap_or_else(|| c.equation()));
    }
    if let Some(p) = p {
        report = report.param("p", p);
    }
    if let Some(m) = max_p {
        report = report.param("max_p", m);
    }
    let headers = ["p", "a_p", "branch", "u^2", "u", "lambda", "tr R", "det R", "residual", "float_residual", "status"];
    Ok(Out::new(report, &headers, rows))
}

pub fn reduce_check(pencil: Option<&str>, ap: i64, p: u64) -> CliResult<Out> {
    let params = parse_pencil(pencil)?;
    let base = Report::new("reduce-check", Status::Pass, Value::Null).param("pencil", pencil_echo(&params)).param("ap", ap).param("p", p);
    match symbolic_reduction(&params.tau, &params.delta, &params.big_delta, ap, p) {
        Ok(r) => {
            let pairs = vec![
                ("reduced", r.reduced.to_string()),
                ("quadratic", r.quadratic.to_string()),
                ("k", r.k.to_string()),
                ("exact", "true".into()),
            ];
            Ok(Out::kv(Report { result: to_value(&r).expect("serialisable"), ..base }, pairs))
        }
        Err(Error::NoSolution(msg)) => {
            let report = Report { status: Status::Fail, result: json!({ "exact": false, "reason": msg }), ..base };
            Ok(Out::kv(report, vec![("exact", "false".into()), ("reason", msg)]))
        }
        Err(e) => Err(usage("--pencil", e.to_string())),
    }
}

pub fn disc_identity(ap: i64, p: u64) -> CliResult<Out> {
    let (big, small, sum) = discriminant_identity(ap, p);
    let expected = 4 * (p as i128) * (p as i128);
    let ok = sum == expected;
    let report = Report::new(
        "disc-identity",
        Status::from_bool(ok),
        json!({ "Delta_p": big.to_string(), "D_p": small.to_string(), "sum": sum.to_string(), "four_p_sq": expected.to_string() }),
    )
    .param("ap", ap)
    .param("p", p);
    let pairs = vec![("Delta_p", big.to_string()), ("D_p", small.to_string()), ("sum", sum.to_string()), ("4p^2", expected.to_string())];
    Ok(Out::kv(report, pairs))
}

pub fn d_off(w: Option<&str>, ap: Option<i64>, p: u64, branch: BranchArg) -> CliResult<Out> {
    let (w_exact, echo) = match (w, ap) {
        (Some(w), None) => (QuadExt::rational(rational("--w", w)?), json!({ "w": w })),
        (None, Some(a)) => {
            let bp = at("--ap", canonical_basepoint(a, p, branch.single()?))?;
            (bp.w_exact, json!({ "ap": a, "branch": bp.branch.as_str() }))
        }
        (Some(_), Some(_)) => return Err(usage("--w", "give either --w or --ap, not both")),
        (None, None) => return Err(usage("--w", "one of --w or --ap is required")),
    };
    let d = at("--w", offshell_distance(&w_exact, p))?;
    let report = Report::new("d-off", Status::Info, json!({ "w": w_exact.to_string(), "d_off": d.to_string(), "d_off_value": cx12(d.to_cx()) }))
        .param("input", echo)
        .param("p", p);
    Ok(Out::kv(report, vec![("w", w_exact.to_string()), ("d_off", d.to_string()), ("value", fmt_cx(d.to_cx()))]))
}

pub fn cd_ratio(ap: i64, p: u64) -> CliResult<Out> {
    let (ra, dcd) = at("--ap", cd_matching_ratio(ap, p))?;
    let report = Report::new("cd-ratio", Status::Info, json!({ "R_A": ra.to_string(), "Delta_CD": dcd.to_string() })).param("ap", ap).param("p", p);
    Ok(Out::kv(report, vec![("R_A", ra.to_string()), ("Delta_CD", dcd.to_string())]))
}

pub fn tco(curve: &CurveArgs, ap: Option<i64>, p: Option<u64>, max_p: Option<u64>) -> CliResult<Out> {
    let cases: Vec<(u64, i64)> = match (ap, p, max_p) {
        (Some(a), Some(p), None) => vec![(p, a)],
        (None, Some(p), None) => {
            let c = curve.resolve()?;
            vec![(p, at("--p", ap_count(&c, p, false))?)]
        }
        (None, None, Some(m)) => {
            let c = curve.resolve()?;
            let mut v = Vec::new();
            for q in good_primes(&c, m) {
                v.push((q, ap_count(&c, q, false)?));
            }
            v
        }
        _ => return Err(usage("--p", "use --ap with --p, --p with a curve, or --max-p with a curve")),
    };
    let points: Vec<_> = cases.iter().map(|&(q, a)| (q, a, tco_basepoint(a, q))).collect();
    let pass = points.iter().all(|(_, _, t)| t.hasse_ok);
    let rows = points
        .iter()
        .map(|(q, a, t)| vec![q.to_string(), a.to_string(), t.y.to_string(), t.lambda_sq.to_string(), t.hasse_ok.to_string()])
        .collect();
    let result: Vec<Value> =
        points.iter().map(|(q, a, t)| json!({ "p": q, "a_p": a, "basepoint": to_value(t).expect("serialisable") })).collect();
    let report = Report::new("tco", Status::from_bool(pass), json!(result));
    Ok(Out::new(report, &["p", "a_p", "Y", "lambda^2", "hasse"], rows))
}

pub fn zco(t: &str, tol: Option<f64>) -> CliResult<Out> {
    let tol = tol.unwrap_or(ZCO_TOL);
    let t = complex("--t", t)?;
    let m = zco_matrix();
    let det = m.det();
    let traces = zco_pinv_traces()?;
    let factor = zco_euler_factor(t)?;
    let (u, l) = zco_basepoint();
    let ok = det.norm() <= tol && (traces.krein - 1.0).abs() <= tol.max(1e-10);
    let entries = [[m.e11, m.e12], [m.e21, m.e22]];
    let result = json!({
        "u": cx12(u),
        "lambda": cx12(l),
        "matrix": entries.iter().map(|r| r.iter().map(|z| cx12(*z)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "det": cx12(det),
        "pinv_trace": to_value(traces).expect("serialisable"),
        "euler_factor": cx12(factor),
    });
    let report = Report::new("zco", Status::from_bool(ok), result).param("t", cx12(t)).tol("det", tol);
    let pairs = vec![
        ("u", fmt_cx(u)),
        ("lambda", fmt_cx(l)),
        ("M", format!("(({}, {}), ({}, {}))", fmt_cx(entries[0][0]), fmt_cx(entries[0][1]), fmt_cx(entries[1][0]), fmt_cx(entries[1][1])),),
        ("det M", fmt_cx(det)),
        ("tr A+ (Krein)", g(traces.krein)),
        ("tr A+ (Euclidean)", g(traces.euclidean)),
        ("1 - t tr A+", fmt_cx(factor)),
    ];
    Ok(Out::kv(report, pairs))
}

pub fn zco_c(c: &str, u: &str) -> CliResult<Out> {
    let cr = rational("--c", c)?;
    let uz = complex("--u", u)?;
    if uz.norm() == 0.0 {
        return Err(usage("--u", "u must be nonzero"));
    }
    let ok = zco_c_trace_invariance(&cr, uz);
    let report = Report::new("zco-c", Status::from_bool(ok), json!({ "trace_invariant": ok, "expected_trace": cx12(2.0 * uz * uz) }))
        .param("c", c)
        .param("u", cx12(uz));
    Ok(Out::kv(report, vec![("expected trace", fmt_cx(2.0 * uz * uz)), ("invariant", ok.to_string())]))
}

pub fn golden() -> CliResult<Out> {
    let (r1, r2) = golden_ratio_spectrum()?;
    let result = json!({ "eigenvalues": [r1.to_string(), r2.to_string()], "values": [cx12(r1.to_cx()), cx12(r2.to_cx())] });
    let report = Report::new("golden", Status::Info, result);
    let rows = [r1, r2].iter().map(|r| vec![r.to_string(), fmt_cx(r.to_cx())]).collect();
    Ok(Out::new(report, &["eigenvalue", "value"], rows))
}

pub fn obstruction(curve: &CurveArgs, k: usize) -> CliResult<Out> {
    let c = curve.resolve()?;
    if k < 2 {
        return Err(usage("--k", "need at least two primes"));
    }
    let w = interpolation_obstruction(&c, k)?;
    let label = c.label().map(str::to_string).unwrap_or_else(|| c.equation());
    match w {
        Some(w) => {
            let pairs = vec![
                ("p", w.p.to_string()),
                ("q", w.q.to_string()),
                ("a_p", w.a_p.to_string()),
                ("a_q", w.a_q.to_string()),
                ("slope_p", w.slope_p.to_string()),
                ("slope_q", w.slope_q.to_string()),
            ];
            let report = Report::new("obstruction", Status::Pass, to_value(&w).expect("serialisable")).param("curve", label).param("k", k);
            Ok(Out::kv(report, pairs))
        }
        None => {
            let report = Report::new("obstruction", Status::Info, Value::Null).param("curve", label).param("k", k);
            Ok(Out::kv(report, vec![("witness", "none among the first k good primes".into())]))
        }
    }
}
