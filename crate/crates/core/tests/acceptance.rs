//! Acceptance suite. Every criterion is recomputed here by a route that does not go
//! through the library kernel it checks, then compared against the library and against
//! `verify::run_all`. One line per criterion is printed; the run passes when the set of
//! failing criteria is exactly the documented red set.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_traits::{One, Zero};

use euler_pencil::catalogue::reference::{self, MatchRow};
use euler_pencil::catalogue::Catalogue;
use euler_pencil::continuum::{
    arcsine_closed_form, dirichlet_l_chi4, eta_functional_equation_residual, universality_integral, Dispersion,
};
use euler_pencil::curves::{ap_count, quartic_to_weierstrass, WeierstrassCurve};
use euler_pencil::exactmath::{parse_rational, rat, rational_to_f64, Cx, QuadExt, Rational};
use euler_pencil::matching::{
    basepoint_solve, canonical_basepoint, discriminant_identity, euler_match_verify, golden_ratio_spectrum,
    interpolation_obstruction, report_at, zco_euler_factor, zco_pinv_traces, Branch, MatchTarget, PencilParams,
};
use euler_pencil::pencil::{eta_gram, j_formula, j_formula_tau_sq, monomial_gram8, pontryagin_index, Pencil2};
use euler_pencil::stats::{accumulation_from_series, bulk_count, delta_p_series, sato_tate_report};
use euler_pencil::verify::{self, random_curves, random_pencils, VerifyOptions};

/// Pinned tolerances.
mod tol {
    pub const CANONICAL_RESIDUAL: f64 = 1e-12;
    pub const MATCH_RESIDUAL: f64 = 1e-9;
    pub const LAMBDA5_PRINTED: f64 = 0.8029;
    pub const LAMBDA5: f64 = 1e-3;
    pub const USQ: f64 = 2e-2;
    pub const ORACLE_AGREEMENT: f64 = 1e-10;
    pub const J_RELATIVE: f64 = 1e-9;
    pub const GRAM: f64 = 1e-12;
    pub const ZCO_DET: f64 = 1e-12;
    pub const ZCO_PINV_TRACE: f64 = 1e-10;
    pub const QUADRATURE: f64 = 1e-11;
    pub const DISPERSION_AGREEMENT: f64 = 1e-8;
    pub const CLOSED_FORM: f64 = 1e-7;
    pub const LEIBNIZ: f64 = 1e-8;
    pub const FUNCTIONAL_EQUATION: f64 = 1e-6;
    pub const INERT_FRACTION: (f64, f64) = (0.48, 0.52);
    pub const KS: f64 = 0.06;
    pub const BULK_TARGET: f64 = 0.597;
    pub const BULK: f64 = 0.03;
    pub const CROSS_CURVE: f64 = 0.02;
}

/// Criteria documented as unattainable from the published data.
const EXPECTED_RED: [u8; 2] = [2, 6];

const STATS_X: u64 = 10_000;

// ---------------------------------------------------------------- oracles

fn model(label: &str) -> [i64; 5] {
    Catalogue::seed().entry(label).unwrap().model.expect("model")
}

fn lib_curve(label: &str) -> WeierstrassCurve {
    Catalogue::seed().curve(label).unwrap()
}

fn md(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

/// `p + 1 - #E(F_p)` for a long Weierstrass model, by counting `y` for each `x`
/// against a table of squares (direct enumeration at `p = 2`).
fn count_ap(a: [i64; 5], p: u64) -> i64 {
    let [a1, a2, a3, a4, a6] = a.map(|v| v as i128);
    let mut affine = 0i64;
    if p == 2 {
        for x in 0..2i128 {
            for y in 0..2i128 {
                if md(y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6), 2) == 0 {
                    affine += 1;
                }
            }
        }
        return 3 - (affine + 1);
    }
    let mut sq = vec![0i64; p as usize];
    for y in 0..p {
        sq[(y * y % p) as usize] += 1;
    }
    for x in 0..p as i128 {
        // (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x)
        let f = x * x * x + a2 * x * x + a4 * x + a6;
        let disc = (a1 * x + a3).pow(2) + 4 * f;
        affine += sq[md(disc, p) as usize];
    }
    p as i64 - affine
}

fn discriminant(a: [i64; 5]) -> i128 {
    let [a1, a2, a3, a4, a6] = a.map(|v| v as i128);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
}

fn curve_j(a: [i64; 5]) -> f64 {
    let [a1, a2, a3, a4, _] = a.map(|v| v as i128);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let c4 = b2 * b2 - 24 * b4;
    (c4 * c4 * c4) as f64 / discriminant(a) as f64
}

fn primes(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

fn f(r: &Rational) -> f64 {
    rational_to_f64(r)
}

/// Trace and determinant of `M^-1` for the background-`diag(1,-1)` pencil matrix `M`.
fn resolvent(tau: f64, delta: f64, big_delta: f64, u: Cx, lambda: Cx) -> (Cx, Cx) {
    let (a, d) = ((tau + delta) / 2.0, (tau - delta) / 2.0);
    let b_sq = big_delta - a * d;
    let k = lambda / u;
    let m11 = u * u - 1.0 - k * a;
    let m22 = u * u + 1.0 - k * d;
    let det_m = m11 * m22 + k * k * b_sq;
    ((m11 + m22) / det_m, 1.0 / det_m)
}

/// `x + y sqrt(d)` over the rationals for a fixed non-square `d`.
#[derive(Clone, Debug)]
struct Q2 {
    x: Rational,
    y: Rational,
    d: Rational,
}

impl Q2 {
    fn of(x: Rational, d: &Rational) -> Q2 {
        Q2 { x, y: Rational::zero(), d: d.clone() }
    }
    fn add(&self, o: &Q2) -> Q2 {
        Q2 { x: &self.x + &o.x, y: &self.y + &o.y, d: self.d.clone() }
    }
    fn mul(&self, o: &Q2) -> Q2 {
        Q2 { x: &self.x * &o.x + &self.d * &self.y * &o.y, y: &self.x * &o.y + &self.y * &o.x, d: self.d.clone() }
    }
    fn scale(&self, c: &Rational) -> Q2 {
        Q2 { x: &self.x * c, y: &self.y * c, d: self.d.clone() }
    }
    fn inv(&self) -> Option<Q2> {
        let n = &self.x * &self.x - &self.d * &self.y * &self.y;
        (!n.is_zero()).then(|| Q2 { x: &self.x / &n, y: -&self.y / &n, d: self.d.clone() })
    }
    fn is_rational(&self, r: &Rational) -> bool {
        self.y.is_zero() && &self.x == r
    }
    fn to_cx(&self) -> Cx {
        let s = Cx::new(f(&self.d), 0.0).sqrt();
        f(&self.x) + f(&self.y) * s
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r < &Rational::zero() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

struct Matched {
    w: Cx,
    /// `tr M^-1 = a_p` and `det M^-1 = p` hold exactly.
    exact: bool,
}

/// Roots of the master quadratic on `(tau, delta, Delta)`, each checked exactly against
/// the inverse of the pencil matrix. With `k = l/u = (2w - a/p)/tau` the matrix is
/// `((w - 1 - k a, -k b), (k b, w + 1 - k d))`, so only `w` enters.
fn match_pencil(tau: &Rational, delta: &Rational, big_delta: &Rational, a: i64, p: u64) -> Vec<Matched> {
    let (ar, pr) = (rat(a, 1), rat(p as i64, 1));
    let t2 = tau * tau;
    let qa = &t2 - rat(4, 1) * big_delta;
    let qb = -(&ar * &qa) / &pr + rat(2, 1) * delta * tau;
    let qc = &t2 - &ar * delta * tau / &pr - big_delta * &ar * &ar / (&pr * &pr) + &t2 / &pr;
    let roots: Vec<Q2> = if qa.is_zero() {
        vec![Q2::of(-&qc / &qb, &rat(0, 1))]
    } else {
        let disc = &qb * &qb - rat(4, 1) * &qa * &qc;
        let two_a = rat(2, 1) * &qa;
        match rational_sqrt(&disc) {
            Some(s) => [&s, &-s.clone()].iter().map(|s| Q2::of((-&qb + *s) / &two_a, &rat(0, 1))).collect(),
            None => [1, -1]
                .iter()
                .map(|&sg| Q2 { x: -&qb / &two_a, y: rat(sg, 1) / &two_a, d: disc.clone() })
                .collect(),
        }
    };
    let (ae, de) = ((tau + delta) / rat(2, 1), (tau - delta) / rat(2, 1));
    let b_sq = big_delta - &ae * &de;
    roots
        .into_iter()
        .map(|w| {
            let d0 = w.d.clone();
            let k = w.scale(&(rat(2, 1) / tau)).add(&Q2::of(-&ar / (&pr * tau), &d0));
            let m11 = w.add(&Q2::of(rat(-1, 1), &d0)).add(&k.scale(&-ae.clone()));
            let m22 = w.add(&Q2::of(rat(1, 1), &d0)).add(&k.scale(&-de.clone()));
            let det_m = m11.mul(&m22).add(&k.mul(&k).scale(&b_sq));
            let exact = match det_m.inv() {
                Some(inv) => m11.add(&m22).mul(&inv).is_rational(&ar) && inv.is_rational(&pr),
                None => false,
            };
            Matched { w: w.to_cx(), exact }
        })
        .collect()
}

/// Exact polynomial identity `tau^2 (P - Y/p) + Y (A Y^2 + B Y + C) = 0` in `Y = u^2`,
/// with `l u = Y (2Y - a/p)/tau`.
fn reduction_vanishes(tau: &Rational, delta: &Rational, big_delta: &Rational, a: i64, p: u64) -> bool {
    type P = Vec<Rational>;
    let add = |x: &P, y: &P| -> P {
        let n = x.len().max(y.len());
        (0..n)
            .map(|i| x.get(i).cloned().unwrap_or_else(Rational::zero) + y.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect()
    };
    let mul = |x: &P, y: &P| -> P {
        let mut out = vec![Rational::zero(); x.len() + y.len() - 1];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                out[i + j] = &out[i + j] + xi * yj;
            }
        }
        out
    };
    let sc = |x: &P, c: &Rational| -> P { x.iter().map(|v| v * c).collect() };
    let (ar, pr) = (rat(a, 1), rat(p as i64, 1));
    let y: P = vec![Rational::zero(), Rational::one()];
    let m: P = vec![-&ar / &pr / tau, rat(2, 1) / tau];
    let l = mul(&y, &m);
    let y3 = mul(&y, &mul(&y, &y));
    // P = Y^3 - Y - tau Y L - delta L + Delta Y M^2
    let mut pp = add(&y3, &sc(&y, &rat(-1, 1)));
    pp = add(&pp, &sc(&mul(&y, &l), &-tau.clone()));
    pp = add(&pp, &sc(&l, &-delta.clone()));
    pp = add(&pp, &sc(&mul(&y, &mul(&m, &m)), big_delta));
    let lhs = sc(&add(&pp, &sc(&y, &(-Rational::one() / &pr))), &(tau * tau));
    let qa = tau * tau - rat(4, 1) * big_delta;
    let qb = -(&ar * &qa) / &pr + rat(2, 1) * delta * tau;
    let qc = tau * tau - &ar * delta * tau / &pr - big_delta * &ar * &ar / (&pr * &pr) + tau * tau / &pr;
    let rhs = mul(&y, &vec![qc, qb, qa]);
    add(&lhs, &rhs).iter().all(Zero::is_zero)
}

// ---------------------------------------------------------------- criteria

type Outcome = (bool, String);

fn c01() -> Outcome {
    let m = model("256b2");
    let lib = lib_curve("256b2");
    let bad: Vec<String> = reference::AP_256B2
        .iter()
        .filter(|&&(p, a)| count_ap(m, p) != a || ap_count(&lib, p, false).unwrap() != a)
        .map(|&(p, a)| format!("p={p}: counted {} listed {a}", count_ap(m, p)))
        .collect();
    (bad.is_empty(), if bad.is_empty() { "14/14 listed traces reproduced".into() } else { bad.join("; ") })
}

fn c02() -> Outcome {
    let (m1, m2) = (model("32a2"), model("2304b1"));
    let mut differ = Vec::new();
    let mut flips = Vec::new();
    for &(p, a1, a2) in &reference::AP_DUALITY {
        let (c1, c2) = (count_ap(m1, p), count_ap(m2, p));
        if (c1, c2) != (a1, a2) {
            differ.push(p);
        }
        if p % 4 == 1 && c2 != -c1 {
            flips.push(p);
        }
    }
    let ok = differ.is_empty() && flips.is_empty();
    (ok, format!("rows differing from counts at p={differ:?}; sign flip fails at p={flips:?}"))
}

fn c03() -> Outcome {
    let mut ok = true;
    let mut worst: f64 = 0.0;
    let mut lambda5 = f64::NAN;
    // (a_p, p, sqrt(Delta_p) coefficient over 2p as exact check values)
    let exact = [
        (0, 3, QuadExt::new(rat(0, 1), rat(2, 3), &rat(3, 1))),
        (-4, 5, QuadExt::new(rat(-2, 5), rat(1, 5), &rat(26, 1))),
        (-4, 13, QuadExt::new(rat(-2, 13), rat(1, 13), &rat(178, 1))),
    ];
    for (a, p, w_plus) in exact {
        let disc = (4 * p * (p + 1) - a * a) as f64;
        for (sign, br) in [(1.0, Branch::Plus), (-1.0, Branch::Minus)] {
            let w = Cx::new((a as f64 + sign * disc.sqrt()) / (2.0 * p as f64), 0.0);
            let u = w.sqrt();
            let lambda = u * u * u - a as f64 * u / (2.0 * p as f64);
            let (tr, det) = resolvent(2.0, 0.0, 2.0, u, lambda);
            worst = worst.max((tr - a as f64).norm()).max((det - p as f64).norm());
            let bp = canonical_basepoint(a, p as u64, br).unwrap();
            let want = if sign > 0.0 { w_plus.clone() } else { w_plus.conj() };
            ok &= bp.w_exact == want && (bp.w - w).norm() <= tol::ORACLE_AGREEMENT;
            ok &= (bp.lambda - lambda).norm() <= tol::ORACLE_AGREEMENT;
            if (a, p, br) == (-4, 5, Branch::Plus) {
                lambda5 = lambda.re;
            }
        }
    }
    ok &= worst <= tol::CANONICAL_RESIDUAL && (lambda5 - tol::LAMBDA5_PRINTED).abs() <= tol::LAMBDA5;
    (ok, format!("exact and float basepoints agree {ok}; lambda_5 {lambda5:.6}; worst residual {worst:.2e}"))
}

/// Library residuals for both branches, or `None` when a branch errors.
fn library_residual(target: &MatchTarget, a: i64, p: u64) -> Option<f64> {
    [Branch::Plus, Branch::Minus].iter().try_fold(0f64, |m, &br| {
        let r = euler_match_verify(target, a, p, br, tol::MATCH_RESIDUAL).ok()?;
        Some(m.max(r.residual_tr).max(r.residual_det).max(r.residual_p))
    })
}

fn c04(o: &VerifyOptions) -> Outcome {
    let ps: Vec<u64> = primes(61).into_iter().filter(|&p| p >= 3).collect();
    let (mut cases, mut worst, mut fails) = (0usize, 0f64, Vec::new());
    let canonical = PencilParams::canonical();
    let mut check = |pp: &PencilParams, target: MatchTarget, ap: i64, p: u64, label: String| {
        let roots = match_pencil(&pp.tau, &pp.delta, &pp.big_delta, ap, p);
        cases += roots.len();
        let lib = library_residual(&target, ap, p);
        worst = worst.max(lib.unwrap_or(f64::INFINITY));
        if roots.len() != 2
            || roots.iter().any(|r| !r.exact)
            || lib.is_none_or(|r| r > tol::MATCH_RESIDUAL)
            || !reduction_vanishes(&pp.tau, &pp.delta, &pp.big_delta, ap, p)
        {
            fails.push(label);
        }
    };
    for curve in random_curves(o.seed, 50) {
        let a: [i64; 5] = curve.coefficients().clone().map(|c| c.to_integer().try_into().unwrap());
        let disc = discriminant(a);
        for &p in ps.iter().filter(|&&p| disc % p as i128 != 0) {
            check(&canonical, MatchTarget::Canonical, count_ap(a, p), p, format!("{a:?} p={p}"));
        }
    }
    for pp in random_pencils(o.seed.wrapping_add(1), 10) {
        for &p in &ps {
            let bound = (2.0 * (p as f64).sqrt()).floor() as i64;
            for ap in [-bound, -1, 0, 1, bound] {
                let label = format!("({}, {}, {}) a_p={ap} p={p}", pp.tau, pp.delta, pp.big_delta);
                check(&pp, MatchTarget::Pencil(pp.clone()), ap, p, label);
            }
        }
    }
    (fails.is_empty(), format!("{cases} basepoints exact; worst library residual {worst:.2e}; failures {fails:?}"))
}

fn table(params: [&str; 3], rows: &[MatchRow], counted: Option<[i64; 5]>) -> Outcome {
    let [t, d, bd] = params.map(|s| parse_rational(s).unwrap());
    let pp = PencilParams::new(t.clone(), d.clone(), bd.clone());
    let mut notes = Vec::new();
    for r in rows {
        if let Some(m) = counted {
            if count_ap(m, r.p) != r.a_p {
                notes.push(format!("p={}: counted a_p {}", r.p, count_ap(m, r.p)));
            }
        }
        let best = match_pencil(&t, &d, &bd, r.a_p, r.p)
            .into_iter()
            .min_by(|x, y| (x.w - r.u_sq).norm().total_cmp(&(y.w - r.u_sq).norm()))
            .unwrap();
        let lib = [Branch::Plus, Branch::Minus]
            .iter()
            .filter_map(|&br| basepoint_solve(&pp, r.a_p, r.p, br).ok())
            .min_by(|x, y| (x.w - best.w).norm().total_cmp(&(y.w - best.w).norm()))
            .and_then(|bp| {
                let rep = report_at(&pp, &bp, r.a_p, r.p, tol::MATCH_RESIDUAL).ok()?;
                ((bp.w - best.w).norm() <= tol::ORACLE_AGREEMENT).then_some(rep.pass)
            })
            .unwrap_or(false);
        let gap = (best.w - r.u_sq).norm();
        if gap > tol::USQ || !best.exact || !lib {
            notes.push(format!("p={}: nearest root {:.4} vs listed {}, gap {gap:.3}", r.p, best.w, r.u_sq));
        }
    }
    (notes.is_empty(), if notes.is_empty() { format!("{} rows within {}", rows.len(), tol::USQ) } else { notes.join("; ") })
}

fn c05() -> Outcome {
    table(reference::CM_D3_PENCIL, &reference::CM_D3_ROWS, Some(model("27a3")))
}

fn c06() -> Outcome {
    table(reference::PENCIL_389A1, &reference::ROWS_389A1, None)
}

fn c07() -> Outcome {
    let mut n = 0;
    for e in Catalogue::seed().with_models() {
        let m = e.model.unwrap();
        let disc = discriminant(m);
        for p in primes(1000).into_iter().filter(|&p| disc % p as i128 != 0) {
            let a = count_ap(m, p) as i128;
            let (p2, big, small) = (p as i128, 4 * p as i128 * (p as i128 + 1) - a * a, a * a - 4 * p as i128);
            if big + small != 4 * p2 * p2 || discriminant_identity(a as i64, p) != (big, small, 4 * p2 * p2) {
                return (false, format!("{} p={p}", e.label));
            }
            n += 1;
        }
    }
    (true, format!("{n} (curve, prime) pairs"))
}

/// Constant term of `phi_i(-u)^T J phi_j(u)` by averaging over the unit circle.
fn gram_numeric(e: f64, a: f64, b: f64, d: f64, lambda: f64) -> [[f64; 2]; 2] {
    let n = 64;
    let mut g = [[0.0; 2]; 2];
    let phis = |u: Cx| {
        let k = lambda / u;
        let (a11, a12, a21, a22) = (u * u - e - k * a, -k * b, k * b, u * u + e - k * d);
        [[a22, -a21], [-a12, a11]]
    };
    for s in 0..n {
        let u = Cx::from_polar(1.0, 2.0 * PI * s as f64 / n as f64);
        let (m, p) = (phis(-u), phis(u));
        for i in 0..2 {
            for j in 0..2 {
                g[i][j] += (m[i][0] * p[j][0] - m[i][1] * p[j][1]).re / n as f64;
            }
        }
    }
    g
}

fn eval_lambda(poly: &euler_pencil::exactmath::LambdaPoly, lambda: f64) -> f64 {
    poly.iter().map(|(k, c)| f(c) * lambda.powi(*k as i32)).sum()
}

/// Symmetric Jacobi eigenvalues.
fn jacobi_eigenvalues(mut m: Vec<Vec<f64>>) -> Vec<f64> {
    let n = m.len();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| m[i][j].powi(2)).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum().max(0.0).mul_add(2.0, -1.0) / (theta.abs() + (theta * theta + 1.0).sqrt());
                let (c, s) = (1.0 / (t * t + 1.0).sqrt(), t / (t * t + 1.0).sqrt());
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn c08() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut index_ok = true;
    let vals = [(1, 1, 1, -1), (2, 3, -1, 5), (3, -2, 4, 1), (1, 0, 2, -3), (5, 7, 1, 2), (2, -5, -3, -4)];
    for (e, a, b, d) in vals {
        let p = Pencil2::from_entries(rat(e, 1), rat(-e, 1), rat(a, 1), rat(b, 1), rat(d, 1));
        let g = eta_gram(&p, &rat(1, 1)).unwrap();
        index_ok &= pontryagin_index(&g).unwrap() == 1;
        for lambda in [0.0, 0.7, -1.3, 2.0] {
            let num = gram_numeric(e as f64, a as f64, b as f64, d as f64, lambda);
            let closed = [[(e * e) as f64, 0.0], [0.0, -(e * e) as f64]];
            for i in 0..2 {
                for j in 0..2 {
                    let lib = eval_lambda(g.entry(i, j), lambda);
                    let neg_lib = eval_lambda(g.entry(i, j), -lambda);
                    worst = worst.max((num[i][j] - closed[i][j]).abs()).max((lib - num[i][j]).abs()).max((lib - neg_lib).abs());
                }
            }
        }
    }
    // Displayed monomial Gram: modes ordered (u^-1, u^0, u^1, u^2) x (e1, e2); only
    // u^-1 <-> u^1 pairings survive, each equal to -2 eps_i.
    let eps = [1.0, -1.0];
    let mut shown = vec![vec![0.0; 8]; 8];
    for i in 0..2 {
        shown[i][4 + i] = -2.0 * eps[i];
        shown[4 + i][i] = -2.0 * eps[i];
    }
    let lib = monomial_gram8(1, -1);
    let lib_f: Vec<Vec<f64>> = lib.matrix.iter().map(|r| r.iter().map(f).collect()).collect();
    let same = lib_f == shown;
    let ev = jacobi_eigenvalues(shown);
    let nonzero: Vec<f64> = ev.iter().cloned().filter(|x| x.abs() > 1e-9).collect();
    let spec = nonzero.len() == 4
        && [-2.0, -2.0, 2.0, 2.0].iter().zip(&nonzero).all(|(a, b)| (a - b).abs() < 1e-12)
        && lib.rank == 4;
    let ok = worst <= tol::GRAM && index_ok && same && spec;
    (ok, format!("gram worst {worst:.1e}; index 1 {index_ok}; monomial matrix matches {same}; spectrum {nonzero:?}"))
}

/// `j` of `y^2 = (tau^2 - 4 Delta) u^4 + 2 tau delta u^2 + delta^2 + 4 Delta` from its
/// quartic invariants `I`, `J`: `j = 1728 * 4 I^3 / (4 I^3 - J^2)`.
fn spectral_j(tau_sq: f64, delta: f64, big_delta: f64) -> (f64, f64) {
    let (qa, qc, qe) = (tau_sq - 4.0 * big_delta, 2.0 * tau_sq.sqrt() * delta, delta * delta + 4.0 * big_delta);
    let i = 12.0 * qa * qe + qc * qc;
    let j = 72.0 * qa * qc * qe - 2.0 * qc * qc * qc;
    (1728.0 * 4.0 * i.powi(3) / (4.0 * i.powi(3) - j * j), i)
}

fn c09() -> Outcome {
    let rel = |x: f64, y: f64| (x - y).abs() / 1f64.max(y.abs());
    let (j202, _) = spectral_j(4.0, 0.0, 2.0);
    let a = j_formula(&rat(2, 1), &rat(0, 1), &rat(2, 1)).unwrap() == rat(1728, 1) && rel(j202, 1728.0) <= tol::J_RELATIVE;
    let (jq, _) = spectral_j(45.0 / 11.0, 1.0, 1.0);
    let b = j_formula_tau_sq(&rat(45, 11), &rat(1, 1), &rat(1, 1)).unwrap() == rat(1728, 1) && rel(jq, 1728.0) <= tol::J_RELATIVE;
    let bd = QuadExt::new(rat(10, 1), rat(1, 2), &rat(427, 1));
    let (_, i0) = spectral_j(81.0, -1.0, bd.to_cx().re);
    let c = j_formula(&QuadExt::rational(rat(-9, 1)), &QuadExt::rational(rat(-1, 1)), &bd).unwrap().is_zero() && i0.abs() <= 1e-9;
    let mut generic = true;
    for (t, d, dd) in [(3, 1, 5), (-5, 2, 7), (1, -4, -3)] {
        let lib = f(&j_formula(&rat(t, 1), &rat(d, 1), &rat(dd, 1)).unwrap());
        generic &= rel(lib, spectral_j((t * t) as f64, d as f64, dd as f64).0) <= tol::J_RELATIVE;
    }
    let curves = [("32a2", 1728.0), ("27a3", 0.0), ("48a1", 35152.0 / 9.0)]
        .iter()
        .all(|&(l, want)| rel(curve_j(model(l)), want) <= tol::J_RELATIVE && rel(f(lib_curve(l).j()), want) <= tol::J_RELATIVE);
    let ok = a && b && c && generic && curves;
    (ok, format!("(2,0,2) {a}; Q=0 witness {b}; j=0 point {c}; generic {generic}; curve j {curves}"))
}

/// Roots of a monic-normalised quartic by Durand-Kerner.
fn quartic_roots(c: [f64; 5]) -> [Cx; 4] {
    let n: Vec<f64> = c.iter().map(|x| x / c[0]).collect();
    let mut z: [Cx; 4] = std::array::from_fn(|k| Cx::new(0.4, 0.9).powu(k as u32));
    for _ in 0..500 {
        let prev = z;
        for k in 0..4 {
            let pz = (((z[k] + n[1]) * z[k] + n[2]) * z[k] + n[3]) * z[k] + n[4];
            let den = (0..4).filter(|&m| m != k).fold(Cx::new(1.0, 0.0), |acc, m| acc * (z[k] - z[m]));
            z[k] -= pz / den;
        }
        if (0..4).all(|k| (z[k] - prev[k]).norm() < 1e-15) {
            break;
        }
    }
    z
}

fn legendre_j_f(l: Cx) -> Cx {
    let q = l * l - l + 1.0;
    256.0 * q * q * q / (l * l * (l - 1.0) * (l - 1.0))
}

fn c10() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (c, want) in [([-1i64, 0, 0, 0, 2], 1728.0), ([1, 0, 1, 0, 1], 35152.0 / 9.0), ([1, 0, 0, 0, 1], 1728.0)] {
        let [a, b, cc, d, e] = c;
        let i = 12 * a * e - 3 * b * d + cc * cc;
        let j = 72 * a * cc * e + 9 * b * cc * d - 27 * a * d * d - 27 * b * b * e - 2 * cc * cc * cc;
        let r = quartic_roots(c.map(|x| x as f64));
        let cross = (r[2] - r[0]) * (r[3] - r[1]) / ((r[2] - r[1]) * (r[3] - r[0]));
        let jr = legendre_j_f(cross);
        let lib = quartic_to_weierstrass(&rat(a, 1), &rat(b, 1), &rat(cc, 1), &rat(d, 1), &rat(e, 1)).unwrap();
        let agree = lib.i == rat(i, 1) && lib.j_inv == rat(j, 1) && lib.a == rat(-27 * i, 1) && lib.b == rat(-27 * j, 1);
        let good = agree && (jr - want).norm() / want <= 1e-8 && (f(&lib.j) - want).abs() / want <= tol::J_RELATIVE;
        ok &= good;
        notes.push(format!("{c:?}: I={i} J={j} j={:.4}", jr.re));
    }
    // y^2 = x^3 + 8x after X = 9x, Y = 27y.
    let q = quartic_to_weierstrass(&rat(-1, 1), &rat(0, 1), &rat(0, 1), &rat(0, 1), &rat(2, 1)).unwrap();
    ok &= q.a == rat(8 * 81, 1) && q.b.is_zero();
    (ok, notes.join("; "))
}

fn c11() -> Outcome {
    let u = 0.5f64.sqrt();
    let lambda = (u.powi(5) - u) / 2.0;
    let k = lambda / u;
    let m = [[u * u - 1.0 - k, -k], [k, u * u + 1.0 + k]];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let tr = m[0][0] + m[1][1];
    let x: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|v| v / (tr * tr)).collect()).collect();
    let mul = |a: &[Vec<f64>], b: &[Vec<f64>]| -> Vec<Vec<f64>> {
        (0..2).map(|i| (0..2).map(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]).collect()).collect()
    };
    let mv: Vec<Vec<f64>> = m.iter().map(|r| r.to_vec()).collect();
    let j_adj = |a: &[Vec<f64>]| -> Vec<Vec<f64>> { vec![vec![a[0][0], -a[1][0]], vec![-a[0][1], a[1][1]]] };
    let close = |a: &[Vec<f64>], b: &[Vec<f64>]| (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).abs() < 1e-14));
    let mx = mul(&mv, &x);
    let xm = mul(&x, &mv);
    let penrose = close(&mul(&mx, &mv), &mv) && close(&mul(&xm, &x), &x) && close(&j_adj(&mx), &mx) && close(&j_adj(&xm), &xm);
    let pinv_trace = x[0][0] + x[1][1];
    let traces = zco_pinv_traces().unwrap();
    let t = Cx::new(0.37, 0.0);
    let factor = (zco_euler_factor(t).unwrap() - (1.0 - t * pinv_trace)).norm() <= tol::ZCO_PINV_TRACE;
    let matrix_ok = close(&mv, &[vec![-0.125, 0.375], vec![-0.375, 1.125]]);
    let mut inv = true;
    for (c, uu) in [(3.0, Cx::new(0.7, 0.2)), (-11.0 / 7.0, Cx::new(1.4, -1.1))] {
        let l = (uu.powu(5) - uu) / 2.0;
        let kk = l / uu;
        let shift = c / (uu * uu);
        let trace = (uu * uu - 1.0 - kk + shift) + (uu * uu + 1.0 + kk - shift);
        inv &= (trace - 2.0 * uu * uu).norm() <= 1e-12 * (2.0 * uu * uu).norm()
            && euler_pencil::matching::zco_c_trace_invariance(&parse_rational(&c.to_string()).unwrap(), uu);
    }
    let (gp, gm) = golden_ratio_spectrum().unwrap();
    let (mt, mdet): (f64, f64) = (1.0, -0.75 - 0.25);
    let disc = (mt * mt - 4.0 * mdet).sqrt();
    let golden = (gp.to_cx().re - (mt + disc) / 2.0).abs() < 1e-15
        && (gm.to_cx().re - (mt - disc) / 2.0).abs() < 1e-15
        && gp == QuadExt::new(rat(1, 2), rat(1, 2), &rat(5, 1));
    let ok = det.abs() <= tol::ZCO_DET
        && matrix_ok
        && penrose
        && (pinv_trace - 1.0).abs() <= tol::ZCO_PINV_TRACE
        && (traces.krein - pinv_trace).abs() <= tol::ZCO_PINV_TRACE
        && factor
        && inv
        && golden;
    (
        ok,
        format!("det {det:.1e}; tr(A+) {pinv_trace:.12} (Penrose {penrose}); factor {factor}; shift {inv}; golden {golden}"),
    )
}

/// `(1/pi) int_0^(pi/2) sin(t) / (z^2 - sin(t)^2) dt`: the common value of every
/// dispersion after `a(xi) = sin(t)`, by composite Simpson.
fn universality_oracle(z: Cx) -> Cx {
    let n = 20_000;
    let h = PI / 2.0 / n as f64;
    let g = |t: f64| t.sin() / (z * z - t.sin().powi(2)) / PI;
    let mut s = g(0.0) + g(PI / 2.0);
    for k in 1..n {
        s += g(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

fn c12() -> Outcome {
    let (mut pair, mut closed, mut oracle) = (0f64, 0f64, 0f64);
    for z in [Cx::new(2.0, 0.0), Cx::new(1.5, 0.0), Cx::new(1.1, 0.0), Cx::new(0.5, 0.1)] {
        let a = universality_integral(Dispersion::Tanh, z, tol::QUADRATURE).unwrap().value;
        let b = universality_integral(Dispersion::Algebraic, z, tol::QUADRATURE).unwrap().value;
        let o = universality_oracle(z);
        pair = pair.max((a - b).norm());
        oracle = oracle.max((a - o).norm()).max((b - o).norm());
        if z.im == 0.0 {
            closed = closed.max((arcsine_closed_form(z).unwrap() - o).norm());
        }
    }
    let ok = pair <= tol::DISPERSION_AGREEMENT && oracle <= tol::DISPERSION_AGREEMENT && closed <= tol::CLOSED_FORM;
    (ok, format!("dispersion gap {pair:.1e}; oracle gap {oracle:.1e}; closed-form gap {closed:.1e}"))
}

/// Hurwitz zeta by Euler-Maclaurin, valid for real `s != 1`.
fn hurwitz(s: f64, a: f64) -> f64 {
    const B2K: [f64; 6] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0];
    let n = 30;
    let mut sum: f64 = (0..n).map(|k| (k as f64 + a).powf(-s)).sum();
    let x = n as f64 + a;
    sum += x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    let (mut rising, mut fact) = (s, 2.0);
    for (k, b) in B2K.iter().enumerate() {
        let k2 = 2 * (k + 1);
        sum += b / fact * rising * x.powf(-s - k2 as f64 + 1.0);
        rising *= (s + k2 as f64 - 1.0) * (s + k2 as f64);
        fact *= (k2 + 1) as f64 * (k2 + 2) as f64;
    }
    sum
}

fn l_oracle(s: f64) -> f64 {
    4f64.powf(-s) * (hurwitz(s, 0.25) - hurwitz(s, 0.75))
}

/// Gamma by Stirling's series after shifting the argument above 10.
fn gamma_oracle(x: f64) -> f64 {
    let (mut y, mut prod) = (x, 1.0);
    while y < 10.0 {
        prod *= y;
        y += 1.0;
    }
    let ln = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + 1.0 / (12.0 * y) - 1.0 / (360.0 * y.powi(3)) + 1.0 / (1260.0 * y.powi(5))
        - 1.0 / (1680.0 * y.powi(7));
    ln.exp() / prod
}

fn c13() -> Outcome {
    let lib1 = dirichlet_l_chi4(1.0, 1e-12).unwrap().value;
    let leibniz = (2.0 * lib1 - PI / 2.0).abs();
    let (mut fe, mut agree) = (0f64, 0f64);
    for s in [0.3, 0.5, 0.7] {
        let rhs = 2.0 * 2f64.powf(s) * PI.powf(s - 1.0) * 4f64.powf(0.5 - s) * (PI * s / 2.0).cos() * gamma_oracle(1.0 - s) * l_oracle(1.0 - s);
        fe = fe.max((2.0 * l_oracle(s) - rhs).abs()).max(eta_functional_equation_residual(s).unwrap());
        agree = agree.max((dirichlet_l_chi4(s, 1e-13).unwrap().value - l_oracle(s)).abs());
    }
    let ok = leibniz <= tol::LEIBNIZ && fe <= tol::FUNCTIONAL_EQUATION && agree <= tol::FUNCTIONAL_EQUATION;
    (ok, format!("|2L(1) - pi/2| {leibniz:.1e}; functional equation {fe:.1e}; L vs Hurwitz {agree:.1e}"))
}

struct Row {
    p: u64,
    a: i64,
    u: f64,
    lambda: f64,
    delta: f64,
}

fn series(m: [i64; 5], x: u64) -> Vec<Row> {
    let disc = discriminant(m);
    primes(x)
        .into_iter()
        .filter(|&p| disc % p as i128 != 0)
        .map(|p| {
            let a = count_ap(m, p);
            let pf = p as f64;
            let w = (a as f64 + ((4 * p * (p + 1)) as f64 - (a * a) as f64).sqrt()) / (2.0 * pf);
            let u = w.sqrt();
            Row { p, a, u, lambda: u * u * u - a as f64 * u / (2.0 * pf), delta: 2.0 * pf.sqrt() * (u - 1.0) }
        })
        .collect()
}

fn log_means(rows: &[Row], x: u64) -> (f64, f64) {
    let (mut sw, mut su, mut sl) = (0.0, 0.0, 0.0);
    for r in rows.iter().filter(|r| r.p <= x) {
        let lw = (r.p as f64).ln();
        sw += lw;
        su += lw * r.u;
        sl += lw * r.lambda;
    }
    (su / sw, sl / sw)
}

fn c14() -> Outcome {
    let rows = series(model("256b2"), STATS_X);
    let inert = rows.iter().filter(|r| r.p % 4 == 3).count() as f64 / rows.len() as f64;
    let mut split: Vec<f64> = rows.iter().filter(|r| r.a != 0).map(|r| r.delta).collect();
    split.sort_by(f64::total_cmp);
    let n = split.len() as f64;
    let ks = split.iter().enumerate().fold(0f64, |d, (i, &t)| {
        let cdf = 0.5 + t.clamp(-1.0, 1.0).asin() / PI;
        d.max((i as f64 + 1.0) / n - cdf).max(cdf - i as f64 / n)
    });
    let bulk = rows.iter().filter(|r| r.delta.abs() < 0.3).count() as f64 / primes(STATS_X).len() as f64;
    let dev = |x: u64| {
        let (ub, lb) = log_means(&rows, x);
        (ub - 1.0).abs() + (lb - 1.0).abs()
    };
    let (d3, d4) = (dev(1000), dev(STATS_X));
    let k = d3 * 1000f64.sqrt();
    let cross = (log_means(&rows, STATS_X).0 - log_means(&series(model("32a2"), STATS_X), STATS_X).0).abs();

    let lib_series = delta_p_series(&lib_curve("256b2"), STATS_X).unwrap();
    let st = sato_tate_report(&lib_series, &rat(1728, 1));
    let lib_bulk = bulk_count(&lib_series, 0.3).unwrap();
    let lib_acc = accumulation_from_series(&lib_series, &[1000, STATS_X]);
    let lib_agree = lib_series.rows.len() == rows.len()
        && lib_series.rows.iter().zip(&rows).all(|(a, b)| a.p == b.p && a.a_p == b.a && (a.delta - b.delta).abs() < 1e-12)
        && (st.inert_fraction - inert).abs() < 1e-12
        && (st.split_ks_distance - ks).abs() < 1e-12
        && (lib_bulk.ratio - bulk).abs() < 1e-12
        && (lib_acc[0].dev - d3).abs() < 1e-10
        && (lib_acc[1].dev - d4).abs() < 1e-10;

    let (lo, hi) = tol::INERT_FRACTION;
    let checks = [
        inert >= lo && inert <= hi,
        ks <= tol::KS,
        (bulk - tol::BULK_TARGET).abs() <= tol::BULK,
        d4 < d3,
        d4 <= k / (STATS_X as f64).sqrt(),
        cross <= tol::CROSS_CURVE,
        lib_agree,
    ];
    (
        checks.iter().all(|&b| b),
        format!("inert {inert:.4}; KS {ks:.4}; bulk {bulk:.4}; dev {d3:.3e} -> {d4:.3e} (K {k:.4}); cross {cross:.1e}; library agrees {lib_agree}"),
    )
}

fn c15() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for e in Catalogue::seed().with_models() {
        let m = e.model.unwrap();
        let disc = discriminant(m);
        let good: Vec<(u64, i64)> =
            primes(200).into_iter().filter(|&p| disc % p as i128 != 0).take(10).map(|p| (p, count_ap(m, p))).collect();
        let distinct = good.iter().any(|&(_, a)| a != good[0].1);
        let lib = interpolation_obstruction(&e.curve().unwrap(), 10).unwrap();
        let lib_ok = match &lib {
            Some(w) => w.a_p != w.a_q && good.contains(&(w.p, w.a_p)) && good.contains(&(w.q, w.a_q)),
            None => false,
        };
        ok &= distinct && lib_ok;
        notes.push(match lib {
            Some(w) => format!("{}: ({}, {}, {}, {})", e.label, w.p, w.q, w.a_p, w.a_q),
            None => format!("{}: none", e.label),
        });
    }
    (ok, notes.join("; "))
}

/// Custom harness so the per-criterion lines are always shown.
fn main() {
    let opts = VerifyOptions::default();
    let checks: Vec<(u8, Outcome)> = vec![
        (1, c01()),
        (2, c02()),
        (3, c03()),
        (4, c04(&opts)),
        (5, c05()),
        (6, c06()),
        (7, c07()),
        (8, c08()),
        (9, c09()),
        (10, c10()),
        (11, c11()),
        (12, c12()),
        (13, c13()),
        (14, c14()),
        (15, c15()),
    ];
    for (id, (pass, detail)) in &checks {
        println!("criterion {id:>2}: {} | {detail}", if *pass { "PASS" } else { "FAIL" });
    }
    let red: BTreeSet<u8> = checks.iter().filter(|(_, (p, _))| !p).map(|(id, _)| *id).collect();

    let library = verify::run_all(&opts);
    let lib_red: BTreeSet<u8> = library.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("verify-all reports failing criteria {lib_red:?}");

    let expected: BTreeSet<u8> = EXPECTED_RED.into_iter().collect();
    assert_eq!(red, expected, "independent checks: failing set changed");
    assert_eq!(lib_red, expected, "verify-all: failing set changed");
}
