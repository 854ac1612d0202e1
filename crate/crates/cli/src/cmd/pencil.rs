//! Pencil construction, spectral polynomial, Gram matrices and the j-map.

use clap::Args;
use euler_pencil::pencil::{eta_gram as gram_of, j1728_locus_q, j_formula, j_formula_tau_sq, lambda_evenness_check, monomial_gram8, pontryagin_index};
use euler_pencil::report::{Report, Status};
use euler_pencil::{EtaGram, Pencil2, Rational};
use serde_json::{json, to_value, Value};

use crate::args::{at, pencil as parse_pencil, rational, rationals, usage, CliResult};
use crate::output::Out;

fn build(pencil: Option<&str>, e: &str) -> CliResult<Pencil2> {
    let params = parse_pencil(pencil)?;
    let e = rational("--e", e)?;
    if e == Rational::from_integer(0.into()) {
        return Err(usage("--e", "the background scale must be nonzero"));
    }
    Ok(Pencil2::from_tdd(&params.tau, &params.delta, &params.big_delta, &e))
}

fn echo(p: &Pencil2) -> Value {
    json!([p.tau().to_string(), p.delta().to_string(), p.big_delta().to_string()])
}

pub fn pencil(pencil: Option<&str>, e: &str) -> CliResult<Out> {
    let p = build(pencil, e)?;
    let pairs = vec![
        ("E1", p.e1.to_string()),
        ("E2", p.e2.to_string()),
        ("a", p.a.to_string()),
        ("d", p.d.to_string()),
        ("b^2", p.b_sq.to_string()),
        ("b", p.b.as_ref().map(|b| b.to_string()).unwrap_or_else(|| format!("sqrt({})", p.b_sq))),
        ("mu", p.mu().to_string()),
    ];
    let mut result = to_value(&p).expect("serialisable");
    result["mu"] = json!(p.mu().to_string());
    let report = Report::new("pencil", Status::Info, result).param("pencil", echo(&p)).param("e", e);
    Ok(Out::kv(report, pairs))
}

pub fn spectral_poly(pencil: Option<&str>, e: &str) -> CliResult<Out> {
    let p = build(pencil, e)?;
    let poly = p.spectral_poly().to_string();
    let report = Report::new("spectral-poly", Status::Info, json!({ "P": poly })).param("pencil", echo(&p)).param("e", e);
    Ok(Out::kv(report, vec![("P", poly)]))
}

/// Which pencil a Gram command acts on.
#[derive(Args, Debug, Clone)]
pub struct GramInput {
    /// tau,delta,Delta on diag(E, -E); canonical when nothing is given.
    #[arg(long, allow_hyphen_values = true)]
    pub pencil: Option<String>,
    /// Raw entries E1,E2,a,b,d.
    #[arg(long, allow_hyphen_values = true)]
    pub entries: Option<String>,
    /// The zeta operator (a, b, d) = (1, 1, -1).
    #[arg(long)]
    pub zco: bool,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub e: String,
    /// Normalisation constant c.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub c: String,
}

impl GramInput {
    fn pencil(&self) -> CliResult<Pencil2> {
        let given = [self.pencil.is_some(), self.entries.is_some(), self.zco].iter().filter(|&&b| b).count();
        if given > 1 {
            return Err(usage("--pencil", "give at most one of --pencil, --entries, --zco"));
        }
        if self.zco {
            return Ok(Pencil2::zco(&rational("--e", &self.e)?));
        }
        if let Some(s) = &self.entries {
            let v = rationals("--entries", s, 5)?;
            return Ok(Pencil2::from_entries(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone()));
        }
        build(self.pencil.as_deref(), &self.e)
    }

    fn gram(&self) -> CliResult<(Pencil2, EtaGram)> {
        let p = self.pencil()?;
        let c = rational("--c", &self.c)?;
        let g = at("--pencil", gram_of(&p, &c))?;
        Ok((p, g))
    }

    fn echo(&self, r: Report) -> Report {
        let source = if self.zco {
            json!("zco")
        } else if let Some(e) = &self.entries {
            json!({ "entries": e })
        } else {
            json!(self.pencil.as_deref().unwrap_or("2,0,2"))
        };
        r.param("pencil", source).param("e", self.e.clone()).param("c", self.c.clone())
    }
}

fn gram_rows(g: &EtaGram) -> Vec<Vec<String>> {
    let s = g.to_strings();
    vec![vec!["1".into(), s[0][0].clone(), s[0][1].clone()], vec!["2".into(), s[1][0].clone(), s[1][1].clone()]]
}

pub fn eta_gram(input: &GramInput) -> CliResult<Out> {
    let (_, g) = input.gram()?;
    let mut result = to_value(&g).expect("serialisable");
    result["lambda_independent"] = json!(g.is_lambda_independent());
    let report = input.echo(Report::new("eta-gram", Status::Info, result));
    Ok(Out::new(report, &["row", "col1", "col2"], gram_rows(&g)))
}

pub fn evenness(input: &GramInput) -> CliResult<Out> {
    let (_, g) = input.gram()?;
    let even = lambda_evenness_check(&g);
    let report = input.echo(Report::new("evenness", Status::from_bool(even), json!({ "even": even, "gram": g })));
    Ok(Out::kv(report, vec![("even", even.to_string())]))
}

pub fn pontryagin(input: &GramInput) -> CliResult<Out> {
    let (_, g) = input.gram()?;
    let kappa = at("--pencil", pontryagin_index(&g))?;
    let diag = [g.at_zero(0, 0).to_string(), g.at_zero(1, 1).to_string()];
    let report = input.echo(Report::new("pontryagin", Status::Info, json!({ "kappa": kappa, "diagonal_at_zero": diag })));
    Ok(Out::kv(report, vec![("G11(0)", diag[0].clone()), ("G22(0)", diag[1].clone()), ("kappa", kappa.to_string())]))
}

pub fn monomial(eps: &str) -> CliResult<Out> {
    let v = rationals("--eps", eps, 2)?;
    let sign = |r: &Rational| -> CliResult<i64> {
        if r.is_integer() && (r.numer() == &1.into() || r.numer() == &(-1).into()) {
            Ok(if r.numer() == &1.into() { 1 } else { -1 })
        } else {
            Err(usage("--eps", format!("signs must be 1 or -1, got {r}")))
        }
    };
    let m = monomial_gram8(sign(&v[0])?, sign(&v[1])?);
    let mut rows: Vec<Vec<String>> = m.matrix.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    rows.push(vec![format!("rank={}", m.rank)]);
    rows.push(vec![format!("eigenvalues={}", m.eigenvalues.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))]);
    let report = Report::new("monomial-gram", Status::Info, to_value(&m).expect("serialisable")).param("eps", eps);
    let headers = ["e1/u", "e2/u", "e1", "e2", "e1 u", "e2 u", "e1 u^2", "e2 u^2"];
    Ok(Out::new(report, &headers, rows))
}

pub fn j(tau: Option<&str>, tau_sq: Option<&str>, delta: &str, big_delta: &str) -> CliResult<Out> {
    let d = rational("--delta", delta)?;
    let bd = rational("--Delta", big_delta)?;
    let (j, given) = match (tau, tau_sq) {
        (Some(t), None) => (at("--tau", j_formula(&rational("--tau", t)?, &d, &bd))?, json!({ "tau": t })),
        (None, Some(t2)) => (at("--tau-sq", j_formula_tau_sq(&rational("--tau-sq", t2)?, &d, &bd))?, json!({ "tau_sq": t2 })),
        (Some(_), Some(_)) => return Err(usage("--tau", "give either --tau or --tau-sq, not both")),
        (None, None) => return Err(usage("--tau", "one of --tau or --tau-sq is required")),
    };
    let report = Report::new("j", Status::Info, json!({ "j": j.to_string() }))
        .param("tau", given)
        .param("delta", delta)
        .param("Delta", big_delta);
    Ok(Out::kv(report, vec![("j", j.to_string())]))
}

pub fn j1728_q(tau_sq: &str, delta: &str, big_delta: &str) -> CliResult<Out> {
    let q = j1728_locus_q(&rational("--tau-sq", tau_sq)?, &rational("--delta", delta)?, &rational("--Delta", big_delta)?);
    let on = q == Rational::from_integer(0.into());
    let report = Report::new("j1728-q", Status::Info, json!({ "Q": q.to_string(), "on_locus": on }))
        .param("tau_sq", tau_sq)
        .param("delta", delta)
        .param("Delta", big_delta);
    Ok(Out::kv(report, vec![("Q", q.to_string()), ("on_locus", on.to_string())]))
}
