//! Point counts, Hasse and Cornacchia checks, quartic and Legendre j.

use euler_pencil::curves::{ap_table, cornacchia_candidates, good_primes as good, hasse_check, legendre_j, quartic_to_weierstrass, PrimeClass};
use euler_pencil::report::{fmt_cx, rational_value, Report, Status};
use euler_pencil::Cx;
use serde_json::{json, to_value};

use crate::args::{at, complex, rational, rationals, CliResult, CurveArgs};
use crate::output::Out;

fn label_of(c: &euler_pencil::WeierstrassCurve) -> String {
    c.label().map(str::to_string).unwrap_or_else(|| c.equation())
}

pub fn ap(curve: &CurveArgs, max_p: u64, force: bool) -> CliResult<Out> {
    let c = curve.resolve()?;
    let table = ap_table(&c, max_p, force)?;
    let status = Status::from_bool(table.hasse_ok());
    let rows = table
        .entries
        .iter()
        .map(|e| {
            let good = e.class == PrimeClass::Good;
            let hasse = if good { hasse_check(e.a_p, e.p).to_string() } else { "-".into() };
            vec![e.p.to_string(), e.a_p.to_string(), if good { "good" } else { "bad" }.into(), hasse]
        })
        .collect();
    let report = Report::new("ap", status, to_value(&table).expect("serialisable"))
        .param("curve", label_of(&c))
        .param("max_p", max_p)
        .param("force", force);
    Ok(Out::new(report, &["p", "a_p", "class", "hasse"], rows))
}

pub fn good_primes(curve: &CurveArgs, max_p: u64) -> CliResult<Out> {
    let c = curve.resolve()?;
    let ps = good(&c, max_p);
    let rows = ps.iter().map(|p| vec![p.to_string()]).collect();
    let report = Report::new("good-primes", Status::Info, json!(ps)).param("curve", label_of(&c)).param("max_p", max_p);
    Ok(Out::new(report, &["p"], rows))
}

pub fn hasse(ap: i64, p: u64) -> CliResult<Out> {
    let ok = hasse_check(ap, p);
    let lhs = (ap as i128) * (ap as i128);
    let rhs = 4 * p as i128;
    let report = Report::new("hasse", Status::from_bool(ok), json!({ "a_p_sq": lhs.to_string(), "four_p": rhs.to_string(), "ok": ok }))
        .param("ap", ap)
        .param("p", p);
    Ok(Out::kv(report, vec![("a_p^2", lhs.to_string()), ("4p", rhs.to_string()), ("ok", ok.to_string())]))
}

pub fn cornacchia(p: u64) -> CliResult<Out> {
    let v = at("--p", cornacchia_candidates(p))?;
    let rows = v.iter().map(|a| vec![a.to_string()]).collect();
    let report = Report::new("cornacchia", Status::Info, json!(v)).param("p", p);
    Ok(Out::new(report, &["a_p"], rows))
}

pub fn quartic(coeffs: &str) -> CliResult<Out> {
    let c = rationals("--coeffs", coeffs, 5)?;
    let q = at("--coeffs", quartic_to_weierstrass(&c[0], &c[1], &c[2], &c[3], &c[4]))?;
    let pairs = vec![
        ("I", q.i.to_string()),
        ("J", q.j_inv.to_string()),
        ("A", q.a.to_string()),
        ("B", q.b.to_string()),
        ("j", q.j.to_string()),
    ];
    let report = Report::new("quartic", Status::Info, to_value(&q).expect("serialisable")).param("coeffs", coeffs);
    Ok(Out::kv(report, pairs))
}

pub fn legendre(lambda: &str) -> CliResult<Out> {
    let (text, value) = if lambda.contains(',') {
        let z: Cx = complex("--lambda", lambda)?;
        let j = at("--lambda", legendre_j(&z))?;
        (fmt_cx(j), euler_pencil::report::cx12(j))
    } else {
        let l = rational("--lambda", lambda)?;
        let j = at("--lambda", legendre_j(&l))?;
        (j.to_string(), rational_value(&j))
    };
    let report = Report::new("legendre-j", Status::Info, json!({ "j": value })).param("lambda", lambda);
    Ok(Out::kv(report, vec![("j", text)]))
}

pub fn curve_j(curve: &CurveArgs) -> CliResult<Out> {
    let c = curve.resolve()?;
    let inv = c.invariants();
    let pairs = vec![
        ("equation", c.equation()),
        ("b2", inv.b2.to_string()),
        ("b4", inv.b4.to_string()),
        ("b6", inv.b6.to_string()),
        ("b8", inv.b8.to_string()),
        ("c4", inv.c4.to_string()),
        ("c6", inv.c6.to_string()),
        ("discriminant", inv.discriminant.to_string()),
        ("j", inv.j.to_string()),
    ];
    let mut result = to_value(inv).expect("serialisable");
    result["equation"] = json!(c.equation());
    let report = Report::new("curve-j", Status::Info, result).param("curve", label_of(&c));
    Ok(Out::kv(report, pairs))
}
