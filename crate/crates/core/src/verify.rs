//! The end-to-end acceptance checks behind `verify-all`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalogue::reference::{self, MatchRow};
use crate::catalogue::Catalogue;
use crate::continuum::{
    arcsine_closed_form, dirichlet_l_chi4, eta_functional_equation_residual, universality_integral, Dispersion,
};
use crate::curves::{ap_count, good_primes, hasse_check, legendre_j, primes_up_to, quartic_to_weierstrass, WeierstrassCurve};
use crate::error::Result;
use crate::exactmath::{parse_rational, rat, Cx, QuadExt, Rational};
use crate::matching::{
    basepoint_solve, canonical_basepoint, canonical_discriminant, discriminant_identity, euler_match_verify,
    golden_ratio_spectrum, interpolation_obstruction, report_at, symbolic_reduction_check, zco_c_trace_invariance,
    zco_euler_factor, zco_matrix, zco_pinv_traces, Branch, MatchTarget, PencilParams,
};
use crate::pencil::{
    eta_gram, j1728_locus_q, j_formula, j_formula_tau_sq, lambda_evenness_check, monomial_gram8, pontryagin_index,
    Pencil2,
};
use crate::stats::{accumulation_from_series, bulk_count, delta_p_series, sato_tate_report, sqrt_x_transfer};

/// Tolerances pinned by the acceptance suite.
pub mod tol {
    pub const CANONICAL_RESIDUAL: f64 = 1e-12;
    pub const MATCH_RESIDUAL: f64 = 1e-9;
    pub const LAMBDA5: f64 = 1e-3;
    pub const USQ: f64 = 2e-2;
    pub const ZCO_DET: f64 = 1e-12;
    pub const ZCO_PINV_TRACE: f64 = 1e-10;
    pub const DISPERSION_AGREEMENT: f64 = 1e-8;
    pub const CLOSED_FORM: f64 = 1e-7;
    pub const QUADRATURE: f64 = 1e-11;
    pub const LEIBNIZ: f64 = 1e-8;
    pub const FUNCTIONAL_EQUATION: f64 = 1e-6;
    pub const INERT_FRACTION: (f64, f64) = (0.48, 0.52);
    pub const KS: f64 = 0.06;
    pub const BULK_TARGET: f64 = 0.597;
    pub const BULK: f64 = 0.03;
    pub const CROSS_CURVE: f64 = 0.02;
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    /// Cutoff for the statistics criterion.
    pub stats_x: u64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { stats_x: 10_000, seed: 20_240_601 }
    }
}

type Check = fn(&VerifyOptions) -> Result<(bool, String)>;

const CRITERIA: [(u8, &str, Check); 15] = [
    (1, "a_p reproduction for 256b2", c01_ap_values),
    (2, "a_p duality table", c02_duality),
    (3, "canonical basepoints", c03_canonical),
    (4, "universal matching property", c04_universal),
    (5, "j = 0 matching table", c05_cm_d3),
    (6, "389a1 matching table", c06_389a1),
    (7, "discriminant identity", c07_discriminant),
    (8, "eta-Gram, evenness, index, monomial Gram", c08_gram),
    (9, "j-map values", c09_jmap),
    (10, "quartic reduction", c10_quartic),
    (11, "zeta operator", c11_zco),
    (12, "continuum universality", c12_universality),
    (13, "chi_-4 identities", c13_chi4),
    (14, "prime statistics", c14_stats),
    (15, "interpolation obstruction", c15_obstruction),
];

/// Runs every criterion in order; an internal error counts as a failure.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|&(id, title, f)| {
            let (pass, detail) = f(opts).unwrap_or_else(|e| (false, format!("error: {e}")));
            CriterionOutcome { id, title, pass, detail }
        })
        .collect()
}

/// Runs one criterion by number.
pub fn run_one(id: u8, opts: &VerifyOptions) -> Option<CriterionOutcome> {
    let &(id, title, f) = CRITERIA.iter().find(|c| c.0 == id)?;
    let (pass, detail) = f(opts).unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(CriterionOutcome { id, title, pass, detail })
}

fn model(label: &str) -> Result<WeierstrassCurve> {
    Catalogue::seed().curve(label)
}

fn c01_ap_values(_: &VerifyOptions) -> Result<(bool, String)> {
    let c = model("256b2")?;
    let mut bad = Vec::new();
    for &(p, a) in &reference::AP_256B2 {
        let got = ap_count(&c, p, false)?;
        if got != a {
            bad.push(format!("p={p}: counted {got}, listed {a}"));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "14/14 primes exact".into() } else { bad.join("; ") }))
}

fn c02_duality(_: &VerifyOptions) -> Result<(bool, String)> {
    let e1 = model("32a2")?;
    let e2 = model("2304b1")?;
    let mut mismatches = Vec::new();
    let mut flips_failed = Vec::new();
    for &(p, a1, a2) in &reference::AP_DUALITY {
        let c1 = ap_count(&e1, p, true)?;
        let c2 = ap_count(&e2, p, true)?;
        if c1 != a1 || c2 != a2 {
            mismatches.push(format!("p={p}: counted ({c1},{c2}) vs listed ({a1},{a2})"));
        }
        if p % 4 == 1 && c2 != -c1 {
            flips_failed.push(p);
        }
    }
    let ok = mismatches.is_empty() && flips_failed.is_empty();
    let detail = format!(
        "{} of 50 rows differ from counting [{}]; counted sign flip fails at split primes {:?}",
        mismatches.len(),
        mismatches.join("; "),
        flips_failed
    );
    Ok((ok, detail))
}

fn c03_canonical(_: &VerifyOptions) -> Result<(bool, String)> {
    let q = |x: (i64, i64), y: (i64, i64), d: i64| QuadExt::new(rat(x.0, x.1), rat(y.0, y.1), &rat(d, 1));
    let w3 = canonical_basepoint(0, 3, Branch::Plus)?;
    let w5p = canonical_basepoint(-4, 5, Branch::Plus)?;
    let w5m = canonical_basepoint(-4, 5, Branch::Minus)?;
    let w13p = canonical_basepoint(-4, 13, Branch::Plus)?;
    let w13m = canonical_basepoint(-4, 13, Branch::Minus)?;
    let exact = canonical_discriminant(0, 3) == 48
        && canonical_discriminant(-4, 5) == 104
        && canonical_discriminant(-4, 13) == 712
        && w3.w_exact == q((0, 1), (2, 3), 3)
        && w5p.w_exact == q((-2, 5), (1, 5), 26)
        && w5m.w_exact == q((-2, 5), (-1, 5), 26)
        && w13p.w_exact == q((-2, 13), (1, 13), 178)
        && w13m.w_exact == q((-2, 13), (-1, 13), 178);
    let lambda_ok = (w5p.lambda.re - 0.8029).abs() <= tol::LAMBDA5;
    let mut worst: f64 = 0.0;
    for (a, p) in [(0, 3), (-4, 5), (-4, 13)] {
        for br in [Branch::Plus, Branch::Minus] {
            let r = euler_match_verify(&MatchTarget::Canonical, a, p, br, tol::CANONICAL_RESIDUAL)?;
            worst = worst.max(r.residual_tr).max(r.residual_det);
        }
    }
    let ok = exact && lambda_ok && worst <= tol::CANONICAL_RESIDUAL;
    Ok((ok, format!("exact forms {exact}; lambda_5 = {:.6}; worst residual {worst:.2e}", w5p.lambda.re)))
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=9))
}

/// 50 random nonsingular curves with `|a_i| <= 20`.
pub fn random_curves(seed: u64, n: usize) -> Vec<WeierstrassCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-20..=20));
        if let Ok(c) = WeierstrassCurve::from_ints(a, None) {
            out.push(c);
        }
    }
    out
}

/// Random rational pencils `(tau, delta, Delta)` with `tau != 0`.
pub fn random_pencils(seed: u64, n: usize) -> Vec<PencilParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = random_rational(&mut rng, 20);
        if t.is_zero() {
            continue;
        }
        out.push(PencilParams::new(t, random_rational(&mut rng, 20), random_rational(&mut rng, 20)));
    }
    out
}

fn c04_universal(o: &VerifyOptions) -> Result<(bool, String)> {
    let primes: Vec<u64> = primes_up_to(61).into_iter().filter(|&p| p >= 3).collect();
    let mut cases = 0usize;
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    let canonical = PencilParams::canonical();
    for curve in random_curves(o.seed, 50) {
        for &p in primes.iter().filter(|&&p| curve.is_good(p)) {
            let a = ap_count(&curve, p, false)?;
            for br in [Branch::Plus, Branch::Minus] {
                cases += 1;
                let r = euler_match_verify(&MatchTarget::Canonical, a, p, br, tol::MATCH_RESIDUAL)?;
                worst = worst.max(r.residual_tr).max(r.residual_det);
                if !r.pass || !symbolic_reduction_check(&canonical.tau, &canonical.delta, &canonical.big_delta, a, p) {
                    failures.push(format!("{} p={p}", curve.equation()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 0x5eed);
    for pp in random_pencils(o.seed.wrapping_add(1), 10) {
        for &p in &primes {
            let bound = (2.0 * (p as f64).sqrt()).floor() as i64;
            let a = rng.gen_range(-bound..=bound);
            debug_assert!(hasse_check(a, p));
            for br in [Branch::Plus, Branch::Minus] {
                cases += 1;
                let r = euler_match_verify(&MatchTarget::Pencil(pp.clone()), a, p, br, tol::MATCH_RESIDUAL);
                let ok = match &r {
                    Ok(r) => {
                        worst = worst.max(r.residual_tr).max(r.residual_det);
                        r.pass
                    }
                    Err(_) => false,
                };
                if !ok || !symbolic_reduction_check(&pp.tau, &pp.delta, &pp.big_delta, a, p) {
                    failures.push(format!("pencil ({}, {}, {}) a_p={a} p={p}", pp.tau, pp.delta, pp.big_delta));
                }
            }
        }
    }
    Ok((failures.is_empty(), format!("{cases} cases, worst residual {worst:.2e}, failures {failures:?}")))
}

/// Matches printed rows on `pencil`, taking for each row the branch nearest the printed `u^2`.
fn table_rows(pencil: &PencilParams, rows: &[MatchRow], counted: Option<&WeierstrassCurve>) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for r in rows {
        if let Some(c) = counted {
            let a = ap_count(c, r.p, false)?;
            if a != r.a_p {
                ok = false;
                notes.push(format!("p={}: counted a_p {a} vs listed {}", r.p, r.a_p));
            }
        }
        let best = [Branch::Plus, Branch::Minus]
            .into_iter()
            .map(|br| basepoint_solve(pencil, r.a_p, r.p, br))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min_by(|x, y| (x.w - r.u_sq).norm().total_cmp(&(y.w - r.u_sq).norm()))
            .expect("two branches");
        let rep = report_at(pencil, &best, r.a_p, r.p, tol::MATCH_RESIDUAL)?;
        let gap = (best.w - r.u_sq).norm();
        if gap > tol::USQ || !rep.pass {
            ok = false;
            notes.push(format!(
                "p={}: u^2 = {} ({} branch) vs listed {}, gap {gap:.4}, residuals {:.1e}/{:.1e}",
                r.p,
                crate::report::fmt_cx(best.w),
                best.branch.as_str(),
                r.u_sq,
                rep.residual_tr,
                rep.residual_det
            ));
        }
    }
    Ok((ok, if notes.is_empty() { format!("{} rows within tolerance", rows.len()) } else { notes.join("; ") }))
}

fn params_of(s: &[&str; 3]) -> Result<PencilParams> {
    Ok(PencilParams::new(parse_rational(s[0])?, parse_rational(s[1])?, parse_rational(s[2])?))
}

fn c05_cm_d3(_: &VerifyOptions) -> Result<(bool, String)> {
    table_rows(&params_of(&reference::CM_D3_PENCIL)?, &reference::CM_D3_ROWS, Some(&model("27a3")?))
}

fn c06_389a1(_: &VerifyOptions) -> Result<(bool, String)> {
    table_rows(&params_of(&reference::PENCIL_389A1)?, &reference::ROWS_389A1, None)
}

fn c07_discriminant(_: &VerifyOptions) -> Result<(bool, String)> {
    let cat = Catalogue::seed();
    let mut n = 0;
    for e in cat.with_models() {
        let c = e.curve()?;
        for p in good_primes(&c, 1000) {
            let (_, _, s) = discriminant_identity(ap_count(&c, p, false)?, p);
            if s != 4 * (p as i128) * (p as i128) {
                return Ok((false, format!("{} p={p}: sum {s}", e.label)));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} (curve, prime) pairs")))
}

fn c08_gram(o: &VerifyOptions) -> Result<(bool, String)> {
    let mut ok = true;
    for e in 1..=3 {
        let g = eta_gram(&Pencil2::zco(&rat(e, 1)), &rat(1, 1))?;
        let want = crate::pencil::EtaGram::diag(rat(e * e, 1), rat(-e * e, 1));
        ok &= g.entries == want.entries && g.is_lambda_independent();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed.wrapping_add(8));
    let mut index_ok = 0;
    for _ in 0..50 {
        let e = loop {
            let e = random_rational(&mut rng, 9);
            if !e.is_zero() {
                break e;
            }
        };
        let p = Pencil2::from_entries(
            e.clone(),
            -e,
            random_rational(&mut rng, 9),
            random_rational(&mut rng, 9),
            random_rational(&mut rng, 9),
        );
        let g = eta_gram(&p, &rat(1, 1))?;
        ok &= lambda_evenness_check(&g);
        if pontryagin_index(&g)? == 1 {
            index_ok += 1;
        }
    }
    let m = monomial_gram8(1, -1);
    let spec_ok = m.eigenvalues == vec![rat(-2, 1), rat(-2, 1), rat(2, 1), rat(2, 1)] && m.rank == 4;
    let pass = ok && index_ok == 50 && spec_ok;
    Ok((pass, format!(
            "zco/evenness {ok}; index 1 for {index_ok}/50; monomial spectrum [{}]",
            m.eigenvalues.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        )))
}

fn c09_jmap(_: &VerifyOptions) -> Result<(bool, String)> {
    let a = j_formula(&rat(2, 1), &rat(0, 1), &rat(2, 1))? == rat(1728, 1);
    let b = j_formula_tau_sq(&rat(45, 11), &rat(1, 1), &rat(1, 1))? == rat(1728, 1)
        && j1728_locus_q(&rat(45, 11), &rat(1, 1), &rat(1, 1)).is_zero();
    let d = QuadExt::new(rat(10, 1), rat(1, 2), &rat(427, 1));
    let qx = |n: i64| QuadExt::rational(rat(n, 1));
    let root = (qx(12) * d.clone() * d.clone() - qx(240) * d.clone() - qx(81)).is_zero();
    let c = root && j_formula(&qx(-9), &qx(-1), &d)?.is_zero();
    let curves = model("32a2")?.j() == &rat(1728, 1)
        && model("27a3")?.j() == &rat(0, 1)
        && model("48a1")?.j() == &rat(35152, 9);
    Ok((a && b && c && curves, format!("(2,0,2) {a}; Q=0 witness {b}; j=0 point {c}; curve j {curves}")))
}

fn c10_quartic(_: &VerifyOptions) -> Result<(bool, String)> {
    let r = |n: i64| rat(n, 1);
    let q = quartic_to_weierstrass(&r(-1), &r(0), &r(0), &r(0), &r(2))?;
    // X = 9x, Y = 27y turns Y^2 = X^3 + 648 X into y^2 = x^3 + 8x.
    let scaled = q.a.clone() / r(81) == r(8) && (q.b.clone() / r(729)).is_zero();
    let a = q.i == r(-24) && q.j_inv.is_zero() && scaled && q.j == r(1728);
    let q2 = quartic_to_weierstrass(&r(1), &r(0), &r(1), &r(0), &r(1))?;
    let b = q2.j == rat(35152, 9) && legendre_j(&rat(1, 4))? == rat(35152, 9) && legendre_j(&r(-1))? == r(1728);
    Ok((a && b, format!("(-1,0,0,0,2): I={} J={} j={}; (1,0,1,0,1): j={}", q.i, q.j_inv, q.j, q2.j)))
}

fn c11_zco(o: &VerifyOptions) -> Result<(bool, String)> {
    let det = zco_matrix().det().norm();
    let traces = zco_pinv_traces()?;
    let t = Cx::new(0.5, 0.0);
    let factor_ok = (zco_euler_factor(t)? - (Cx::new(1.0, 0.0) - t)).norm() <= tol::ZCO_PINV_TRACE;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed.wrapping_add(11));
    let inv = (0..20).all(|_| {
        let c = random_rational(&mut rng, 20);
        let u = Cx::new(rng.gen_range(0.1..2.0), rng.gen_range(-2.0..2.0));
        zco_c_trace_invariance(&c, u)
    });
    let (gp, gm) = golden_ratio_spectrum()?;
    let golden = gp == QuadExt::new(rat(1, 2), rat(1, 2), &rat(5, 1)) && gm == QuadExt::new(rat(1, 2), rat(-1, 2), &rat(5, 1));
    let ok = det <= tol::ZCO_DET && (traces.krein - 1.0).abs() <= tol::ZCO_PINV_TRACE && factor_ok && inv && golden;
    Ok((
        ok,
        format!(
            "|det| {det:.1e}; tr(A+) {:.12} (euclidean {:.6}); factor {factor_ok}; zco_c {inv}; golden {golden}",
            traces.krein, traces.euclidean
        ),
    ))
}

fn c12_universality(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut worst_pair: f64 = 0.0;
    let mut worst_closed: f64 = 0.0;
    for z in [Cx::new(2.0, 0.0), Cx::new(1.5, 0.0), Cx::new(1.1, 0.0), Cx::new(0.5, 0.1)] {
        let a = universality_integral(Dispersion::Tanh, z, tol::QUADRATURE)?.value;
        let b = universality_integral(Dispersion::Algebraic, z, tol::QUADRATURE)?.value;
        worst_pair = worst_pair.max((a - b).norm());
        if z.im == 0.0 {
            let c = arcsine_closed_form(z)?;
            worst_closed = worst_closed.max((a - c).norm()).max((b - c).norm());
        }
    }
    ok &= worst_pair <= tol::DISPERSION_AGREEMENT && worst_closed <= tol::CLOSED_FORM;
    Ok((ok, format!("dispersion gap {worst_pair:.2e}; closed-form gap {worst_closed:.2e}")))
}

fn c13_chi4(_: &VerifyOptions) -> Result<(bool, String)> {
    let eta1 = 2.0 * dirichlet_l_chi4(1.0, 1e-12)?.value;
    let gap = (eta1 - std::f64::consts::FRAC_PI_2).abs();
    let res = [0.3, 0.5, 0.7].map(|s| eta_functional_equation_residual(s).unwrap_or(f64::INFINITY));
    let worst = res.iter().cloned().fold(0.0f64, f64::max);
    Ok((gap <= tol::LEIBNIZ && worst <= tol::FUNCTIONAL_EQUATION, format!("|2L(1) - pi/2| {gap:.1e}; worst residual {worst:.1e}")))
}

fn c14_stats(o: &VerifyOptions) -> Result<(bool, String)> {
    let c = model("256b2")?;
    let s = delta_p_series(&c, o.stats_x)?;
    let st = sato_tate_report(&s, c.j());
    let bulk = bulk_count(&s, 0.3)?;
    let acc = accumulation_from_series(&s, &[1000, o.stats_x]);
    let (k, transfer) = sqrt_x_transfer(&acc).unwrap_or((f64::NAN, false));
    let other = delta_p_series(&model("32a2")?, o.stats_x)?;
    let acc2 = accumulation_from_series(&other, &[o.stats_x]);
    let cross = (acc[1].u_bar - acc2[0].u_bar).abs();
    let (lo, hi) = tol::INERT_FRACTION;
    let checks = [
        st.inert_fraction >= lo && st.inert_fraction <= hi,
        st.split_ks_distance <= tol::KS,
        (bulk.ratio - tol::BULK_TARGET).abs() <= tol::BULK,
        acc[1].dev < acc[0].dev,
        transfer,
        cross <= tol::CROSS_CURVE,
    ];
    Ok((
        checks.iter().all(|&b| b),
        format!(
            "inert {:.4}; KS {:.4}; bulk {:.4}; dev {:.3e} -> {:.3e} (K {k:.4}); cross {cross:.2e}; checks {checks:?}",
            st.inert_fraction, st.split_ks_distance, bulk.ratio, acc[0].dev, acc[1].dev
        ),
    ))
}

fn c15_obstruction(_: &VerifyOptions) -> Result<(bool, String)> {
    let cat = Catalogue::seed();
    let mut notes = Vec::new();
    let mut ok = true;
    for e in cat.with_models() {
        match interpolation_obstruction(&e.curve()?, 10)? {
            Some(w) => notes.push(format!("{}: ({}, {}, {}, {})", e.label, w.p, w.q, w.a_p, w.a_q)),
            None => {
                ok = false;
                notes.push(format!("{}: none", e.label));
            }
        }
    }
    Ok((ok, notes.join("; ")))
}
