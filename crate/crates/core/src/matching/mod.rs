//! Per-prime Euler-factor matching: the master quadratic, basepoints and reports.

mod special;

pub use special::{
    golden_ratio_spectrum, interpolation_obstruction, zco_basepoint, zco_c_trace_invariance, zco_euler_factor,
    zco_matrix, zco_pinv_traces, ObstructionWitness, ZcoPinvTraces,
};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::curves::hasse_check;
use crate::error::{Error, Result};
use crate::exactmath::{poly_divrem, quad_roots, rat, Cx, Field, LaurentBiPoly, Poly, QuadExt, Rational};
use crate::pencil::Pencil2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(Error::Parse(format!("branch must be plus or minus, got {other:?}"))),
        }
    }
}

/// Where `w = u^2` lives: positive real (real `u`), negative real (imaginary `u`), or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sheet {
    Real,
    Imaginary,
    Complex,
}

fn classify_sheet(w: &QuadExt) -> Sheet {
    match w.signum() {
        Some(s) if s >= 0 => Sheet::Real,
        Some(_) => Sheet::Imaginary,
        None => Sheet::Complex,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Basepoint {
    /// Exact `w = u^2`.
    #[serde(serialize_with = "ser_display")]
    pub w_exact: QuadExt,
    #[serde(serialize_with = "ser_cx")]
    pub w: Cx,
    /// Principal square root of `w`.
    #[serde(serialize_with = "ser_cx")]
    pub u: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub lambda: Cx,
    pub branch: Branch,
    pub sheet: Sheet,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_cx<S: serde::Serializer>(z: &Cx, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&crate::report::cx12(*z), s)
}

/// Pencil parameters `(tau, delta, Delta)` on the background `diag(1, -1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PencilParams {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub tau: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub delta: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub big_delta: Rational,
}

impl PencilParams {
    pub fn new(tau: Rational, delta: Rational, big_delta: Rational) -> Self {
        PencilParams { tau, delta, big_delta }
    }

    pub fn canonical() -> Self {
        Self::new(rat(2, 1), rat(0, 1), rat(2, 1))
    }

    pub fn pencil(&self) -> Pencil2 {
        Pencil2::from_tdd(&self.tau, &self.delta, &self.big_delta, &Rational::one())
    }
}

/// `A Y^2 + B Y + C` with `A = tau^2 - 4 Delta`, `B = -a_p A/p + 2 delta tau`,
/// `C = tau^2 - a_p delta tau/p - Delta a_p^2/p^2 + tau^2/p`.
pub fn master_quadratic(
    tau: &Rational,
    delta: &Rational,
    big_delta: &Rational,
    a_p: i64,
    p: u64,
) -> Result<(Rational, Rational, Rational)> {
    if tau.is_zero() {
        return Err(Error::Domain("tau = 0 has no master quadratic; use the zeta-operator path".into()));
    }
    let a = rat(a_p, 1);
    let p = rat(p as i64, 1);
    let t2 = tau * tau;
    let qa = &t2 - rat(4, 1) * big_delta;
    let qb = -(&a * &qa) / &p + rat(2, 1) * delta * tau;
    let qc = &t2 - &a * delta * tau / &p - big_delta * &a * &a / (&p * &p) + &t2 / &p;
    Ok((qa, qb, qc))
}

fn lambda_from_u(u: Cx, tau: &Rational, a_p: i64, p: u64) -> Cx {
    let t = crate::exactmath::rational_to_f64(tau);
    2.0 * u * u * u / t - (a_p as f64) * u / (p as f64 * t)
}

fn make_basepoint(w_exact: QuadExt, branch: Branch, lambda: impl Fn(Cx) -> Cx) -> Basepoint {
    let w = w_exact.to_cx();
    let u = w.sqrt();
    Basepoint { sheet: classify_sheet(&w_exact), w, u, lambda: lambda(u), w_exact, branch }
}

/// Solves the master quadratic. The plus branch is `(-B + sgn(A) sqrt(B^2 - 4AC)) / (2A)`,
/// the larger root when both are real; for the canonical pencil it is `w^+`.
/// `A = 0` falls back to the linear root `-C/B`, reported as the plus branch.
pub fn basepoint_solve(params: &PencilParams, a_p: i64, p: u64, branch: Branch) -> Result<Basepoint> {
    let (qa, qb, qc) = master_quadratic(&params.tau, &params.delta, &params.big_delta, a_p, p)?;
    let lam = |u: Cx| lambda_from_u(u, &params.tau, a_p, p);
    if qa.is_zero() {
        if qb.is_zero() {
            return Err(Error::NoSolution(format!("master quadratic vanishes identically at p={p}")));
        }
        return Ok(make_basepoint(QuadExt::rational(-qc / qb), Branch::Plus, lam));
    }
    let (r1, r2) = quad_roots(&qa, &qb, &qc)?;
    let (plus, minus) = if qa < Rational::zero() { (r2, r1) } else { (r1, r2) };
    let w = match branch {
        Branch::Plus => plus,
        Branch::Minus => minus,
    };
    Ok(make_basepoint(w, branch, lam))
}

/// `Delta_p = 4p(p+1) - a_p^2`.
pub fn canonical_discriminant(a_p: i64, p: u64) -> i128 {
    4 * p as i128 * (p as i128 + 1) - (a_p as i128) * (a_p as i128)
}

/// `w^+- = (a_p +- sqrt(Delta_p)) / (2p)` with `l = u^3 - a_p u/(2p)`.
pub fn canonical_basepoint(a_p: i64, p: u64, branch: Branch) -> Result<Basepoint> {
    let disc = canonical_discriminant(a_p, p);
    if disc <= 0 {
        return Err(Error::HasseViolation { a_p, p });
    }
    let root = QuadExt::sqrt_of(&Rational::from_integer(disc.into()));
    let sign = match branch {
        Branch::Plus => rat(1, 1),
        Branch::Minus => rat(-1, 1),
    };
    let num = QuadExt::rational(rat(a_p, 1)) + root * QuadExt::rational(sign);
    let w = num * QuadExt::rational(rat(1, 2 * p as i64));
    let k = a_p as f64 / (2.0 * p as f64);
    Ok(make_basepoint(w, branch, |u| u * u * u - k * u))
}

/// Which operator to match against.
#[derive(Clone, Debug, PartialEq)]
pub enum MatchTarget {
    /// Closed-form canonical basepoint on the `(2, 0, 2)` pencil.
    Canonical,
    Pencil(PencilParams),
}

impl MatchTarget {
    pub fn params(&self) -> PencilParams {
        match self {
            MatchTarget::Canonical => PencilParams::canonical(),
            MatchTarget::Pencil(p) => p.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatchReport {
    pub p: u64,
    pub a_p: i64,
    pub pencil: PencilParams,
    pub basepoint: Basepoint,
    #[serde(serialize_with = "ser_cx")]
    pub trace: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub det: Cx,
    pub residual_tr: f64,
    pub residual_det: f64,
    #[serde(serialize_with = "ser_cx")]
    pub p_value: Cx,
    /// `|P(u, l) - w/p|`.
    pub residual_p: f64,
    /// `max(|tr R - a_p|, |det R - p|)` from plain floating-point evaluation at `(u, l)`.
    pub float_residual: f64,
    #[serde(serialize_with = "ser_cx")]
    pub offshell_distance: Cx,
    /// `(1, -a_p, p)`: coefficients of `1 - a_p X + p X^2`, `X = p^-s`.
    pub euler_poly: [i64; 3],
    pub tolerance: f64,
    pub pass: bool,
}

/// Solves the basepoint and checks `tr R = a_p`, `det R = p` and `P = w/p`.
/// Residuals above `tol` give a failing report, not an error.
pub fn euler_match_verify(target: &MatchTarget, a_p: i64, p: u64, branch: Branch, tol: f64) -> Result<MatchReport> {
    if !hasse_check(a_p, p) {
        return Err(Error::HasseViolation { a_p, p });
    }
    let params = target.params();
    let bp = match target {
        MatchTarget::Canonical => canonical_basepoint(a_p, p, branch)?,
        MatchTarget::Pencil(pp) => basepoint_solve(pp, a_p, p, branch)?,
    };
    report_at(&params, &bp, a_p, p, tol)
}

/// Builds the report for a given basepoint; exposed for the involution check.
///
/// Every basepoint satisfies `l = k u` with `k = (2w - a_p/p)/tau`, so trace, determinant
/// and `P` are evaluated exactly in `Q(sqrt disc)` and only then rounded. The plain
/// floating-point evaluation at `(u, l)` is kept as `float_residual`; far roots lose
/// several digits there to cancellation.
pub fn report_at(params: &PencilParams, bp: &Basepoint, a_p: i64, p: u64, tol: f64) -> Result<MatchReport> {
    let pencil = params.pencil();
    let pr = rat(p as i64, 1);
    let w = &bp.w_exact;
    let k = (QuadExt::rational(rat(2, 1)) * w.clone() - QuadExt::rational(rat(a_p, 1) / &pr))
        .div(&QuadExt::rational(params.tau.clone()))?;
    let slack = (bp.lambda - bp.u * k.to_cx()).norm();
    if slack > 1e-9 * (1.0 + bp.lambda.norm()) {
        return Err(Error::Domain(format!("basepoint lambda is off the slice l = k(w) u by {slack:.3e}")));
    }
    let (tr_x, det_x, p_x) = pencil.resolvent_on_slice(w, &k)?;
    let residual = |v: QuadExt, target: QuadExt| -> f64 { (v - target).to_cx().norm() };
    let residual_tr = residual(tr_x.clone(), QuadExt::rational(rat(a_p, 1)));
    let residual_det = residual(det_x.clone(), QuadExt::rational(pr.clone()));
    let residual_p = residual(p_x.clone(), w.clone() * QuadExt::rational(Rational::one() / &pr));
    let pf = p as f64;
    let float_residual = match pencil.resolvent_tr_det_cx(bp.u, bp.lambda, 0.0) {
        Ok((t, d)) => (t - a_p as f64).norm().max((d - pf).norm()),
        Err(_) => f64::INFINITY,
    };
    let offshell_distance = offshell_distance(w, p)?.to_cx();
    let pass = residual_tr <= tol && residual_det <= tol && residual_p <= tol;
    Ok(MatchReport {
        p,
        a_p,
        pencil: params.clone(),
        basepoint: bp.clone(),
        trace: tr_x.to_cx(),
        det: det_x.to_cx(),
        residual_tr,
        residual_det,
        p_value: p_x.to_cx(),
        residual_p,
        float_residual,
        offshell_distance,
        euler_poly: [1, -a_p, p as i64],
        tolerance: tol,
        pass,
    })
}

/// Outcome of the exact reduction of `P(u, l(u)) - u^2/p` to the master quadratic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymbolicReduction {
    /// `tau^2 (P - Y/p)` as a polynomial in `Y = u^2`, low degree first.
    #[serde(serialize_with = "ser_poly")]
    pub reduced: Poly,
    #[serde(serialize_with = "ser_poly")]
    pub quadratic: Poly,
    /// `k` in the quotient `k Y`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub k: Rational,
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    serde::Serialize::serialize(&v, s)
}

/// Substitutes `l = 2u^3/tau - a_p u/(p tau)` into `P(u, l) - u^2/p` exactly, rewrites
/// `tau^2 (P - u^2/p)` in `Y = u^2` and divides by `A Y^2 + B Y + C`.
/// Succeeds only for zero remainder and quotient `k Y` with `k != 0`.
pub fn symbolic_reduction(tau: &Rational, delta: &Rational, big_delta: &Rational, a_p: i64, p: u64) -> Result<SymbolicReduction> {
    let (qa, qb, qc) = master_quadratic(tau, delta, big_delta, a_p, p)?;
    let pencil = Pencil2::from_tdd(tau, delta, big_delta, &Rational::one());
    let pr = rat(p as i64, 1);
    let sub = LaurentBiPoly::monomial(rat(2, 1) / tau, 3, 0) + LaurentBiPoly::monomial(-rat(a_p, 1) / (&pr * tau), 1, 0);
    let expr = &pencil.spectral_poly().substitute_lambda(&sub) - &LaurentBiPoly::monomial(Rational::one() / &pr, 2, 0);
    let expr = expr.scale(&(tau * tau));
    let mut coeffs: Vec<Rational> = Vec::new();
    for (&(i, j), c) in expr.terms() {
        if j != 0 || i < 0 || i % 2 != 0 {
            return Err(Error::NoSolution(format!("reduction left a term u^{i} l^{j} with coefficient {c}")));
        }
        let k = (i / 2) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = c.clone();
    }
    let reduced = Poly::new(coeffs);
    let quadratic = Poly::new(vec![qc, qb, qa]);
    if quadratic.is_zero() {
        return Err(Error::NoSolution("master quadratic vanishes identically".into()));
    }
    let (q, r) = poly_divrem(&reduced, &quadratic)?;
    if !r.is_zero() {
        return Err(Error::NoSolution(format!("nonzero remainder {:?}", r.coeffs())));
    }
    let k = q.coeff(1);
    if q.degree() != Some(1) || !q.coeff(0).is_zero() || k.is_zero() {
        return Err(Error::NoSolution(format!("quotient {:?} is not k*Y", q.coeffs())));
    }
    Ok(SymbolicReduction { reduced, quadratic, k })
}

/// Boolean form of [`symbolic_reduction`].
pub fn symbolic_reduction_check(tau: &Rational, delta: &Rational, big_delta: &Rational, a_p: i64, p: u64) -> bool {
    symbolic_reduction(tau, delta, big_delta, a_p, p).is_ok()
}

/// `(Delta_p, D_p, Delta_p + D_p)` with `D_p = a_p^2 - 4p`; the sum is always `4p^2`.
pub fn discriminant_identity(a_p: i64, p: u64) -> (i128, i128, i128) {
    let big = canonical_discriminant(a_p, p);
    let small = (a_p as i128) * (a_p as i128) - 4 * p as i128;
    (big, small, big + small)
}

/// `d_off = w / (p (w + 1))`.
pub fn offshell_distance<T: Field>(w: &T, p: u64) -> Result<T> {
    let one = T::one();
    let denom = T::from_rational(&rat(p as i64, 1)) * (w.clone() + one);
    if denom.is_zero() {
        return Err(Error::Pole("off-shell distance at w = -1".into()));
    }
    w.div(&denom)
}

/// `R_A = p(p + 1 - a_p)/(a_p - 2p)^2` and `Delta_CD = 9 - 60 R_A`.
pub fn cd_matching_ratio(a_p: i64, p: u64) -> Result<(Rational, Rational)> {
    let pr = rat(p as i64, 1);
    let den = rat(a_p, 1) - rat(2, 1) * &pr;
    if den.is_zero() {
        return Err(Error::DivisionByZero("a_p = 2p".into()));
    }
    let ra = &pr * (&pr + rat(1, 1) - rat(a_p, 1)) / (&den * &den);
    let dcd = rat(9, 1) - rat(60, 1) * &ra;
    Ok((ra, dcd))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TcoBasepoint {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub y: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub lambda_sq: Rational,
    pub hasse_ok: bool,
}

/// `Y = (a_p - p)/(2p)` and `l^2 = Y^3 + Y^2 + Y` on the spectral curve of the cyclic operator.
pub fn tco_basepoint(a_p: i64, p: u64) -> TcoBasepoint {
    let y = rat(a_p - p as i64, 2 * p as i64);
    let lambda_sq = &y * &y * &y + &y * &y + &y;
    TcoBasepoint { y, lambda_sq, hasse_ok: hasse_check(a_p, p) }
}
