//! Prime sweeps of the canonical basepoint: the `delta_p` fluctuation, the CM
//! Sato-Tate law, bulk counts and log-weighted accumulation means.

use rayon::prelude::*;
use serde::Serialize;

use crate::continuum::arcsine_cdf;
use crate::curves::{ap_count, is_prime, prime_pi, primes_up_to, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::matching::{canonical_basepoint, Branch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowClass {
    /// `a_p = 0` (supersingular).
    Inert,
    Split,
    Bad,
}

impl RowClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RowClass::Inert => "inert",
            RowClass::Split => "split",
            RowClass::Bad => "bad",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesRow {
    pub p: u64,
    pub a_p: i64,
    pub w_plus: f64,
    pub u: f64,
    pub lambda: f64,
    /// `(u - 1) 2 sqrt(p)`.
    pub delta: f64,
    pub class: RowClass,
    /// `|delta - a_p/(2 sqrt p)| <= 3/(2 sqrt p)`.
    pub bound_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimeSeries {
    pub label: String,
    pub x: u64,
    pub rows: Vec<SeriesRow>,
}

impl PrimeSeries {
    pub fn all_bounds_ok(&self) -> bool {
        self.rows.iter().all(|r| r.bound_ok)
    }
}

fn row(curve: &WeierstrassCurve, p: u64) -> Result<SeriesRow> {
    let a_p = ap_count(curve, p, false)?;
    let bp = canonical_basepoint(a_p, p, Branch::Plus)?;
    let sp = (p as f64).sqrt();
    let (w_plus, u, lambda) = (bp.w.re, bp.u.re, bp.lambda.re);
    let delta = (u - 1.0) * 2.0 * sp;
    let bound_ok = (delta - a_p as f64 / (2.0 * sp)).abs() <= 1.5 / sp;
    let class = if a_p == 0 { RowClass::Inert } else { RowClass::Split };
    Ok(SeriesRow { p, a_p, w_plus, u, lambda, delta, class, bound_ok })
}

/// Canonical basepoint observables at every good prime `p <= x`, in ascending order.
/// Rows are computed in parallel on the current rayon pool.
pub fn delta_p_series(curve: &WeierstrassCurve, x: u64) -> Result<PrimeSeries> {
    if x < 10 {
        return Err(Error::Domain(format!("series cutoff must be at least 10, got {x}")));
    }
    let primes: Vec<u64> = primes_up_to(x).into_iter().filter(|&p| curve.is_good(p)).collect();
    let rows = primes.par_iter().map(|&p| row(curve, p)).collect::<Result<Vec<_>>>()?;
    Ok(PrimeSeries { label: curve.label().unwrap_or("inline").to_string(), x, rows })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SatoTateReport {
    /// `#{p = 3 mod 4} / #good`.
    pub inert_fraction: f64,
    pub split_count: usize,
    /// Kolmogorov-Smirnov distance of split `delta_p` to the arcsine law.
    pub split_ks_distance: f64,
    /// `max |delta_p|` over rows with `a_p = 0` and `p >= 101`.
    pub inert_max_delta_from_101: f64,
    /// Split `delta_p` in bins of width 0.1.
    pub histogram: Vec<HistogramBin>,
    pub warnings: Vec<String>,
}

/// Sup-norm distance between the empirical CDF of `values` and `cdf`.
pub fn ks_distance(values: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len() as f64;
    v.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = cdf(x);
        d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n)
    })
}

pub const BIN_WIDTH: f64 = 0.1;

pub fn histogram(values: &[f64], width: f64) -> Vec<HistogramBin> {
    let mut bins = std::collections::BTreeMap::<i64, usize>::new();
    for &v in values {
        *bins.entry((v / width).floor() as i64).or_default() += 1;
    }
    bins.into_iter().map(|(k, count)| HistogramBin { lo: k as f64 * width, hi: (k + 1) as f64 * width, count }).collect()
}

/// Sato-Tate diagnostics for a series; warns when the curve is not CM by `Z[i]`.
pub fn sato_tate_report(series: &PrimeSeries, j: &Rational) -> SatoTateReport {
    let mut warnings = Vec::new();
    if *j != rat(1728, 1) {
        warnings.push(format!("j = {j} is not 1728; the arcsine law for split primes does not apply"));
    }
    let good = series.rows.len();
    let inert = series.rows.iter().filter(|r| r.p % 4 == 3).count();
    let split: Vec<f64> = series.rows.iter().filter(|r| r.class == RowClass::Split).map(|r| r.delta).collect();
    let inert_max = series
        .rows
        .iter()
        .filter(|r| r.class == RowClass::Inert && r.p >= 101)
        .fold(0.0f64, |m, r| m.max(r.delta.abs()));
    SatoTateReport {
        inert_fraction: if good == 0 { 0.0 } else { inert as f64 / good as f64 },
        split_count: split.len(),
        split_ks_distance: if split.is_empty() { 1.0 } else { ks_distance(&split, arcsine_cdf) },
        inert_max_delta_from_101: inert_max,
        histogram: histogram(&split, BIN_WIDTH),
        warnings,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BulkCount {
    pub epsilon: f64,
    pub n_delta: usize,
    /// Number of primes up to the cutoff, bad ones included.
    pub pi_x: usize,
    pub ratio: f64,
    /// `1/2 + arcsin(eps)/pi`.
    pub expected: f64,
}

/// `#{p <= X : |delta_p| < eps} / pi(X)`.
pub fn bulk_count(series: &PrimeSeries, epsilon: f64) -> Result<BulkCount> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Domain(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let n_delta = series.rows.iter().filter(|r| r.delta.abs() < epsilon).count();
    let pi_x = prime_pi(series.x);
    Ok(BulkCount {
        epsilon,
        n_delta,
        pi_x,
        ratio: n_delta as f64 / pi_x as f64,
        expected: 0.5 + epsilon.asin() / std::f64::consts::PI,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AccumulationPoint {
    pub x: u64,
    pub u_bar: f64,
    pub lambda_bar: f64,
    /// `|u_bar - 1| + |lambda_bar - 1|`.
    pub dev: f64,
}

/// Log-weighted means of `u_p` and `lambda_p` over good primes up to each cutoff,
/// summed in ascending `p`.
pub fn accumulation_means(curve: &WeierstrassCurve, xs: &[u64]) -> Result<Vec<AccumulationPoint>> {
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("cutoffs must be ascending".into()));
    }
    let Some(&xmax) = xs.last() else { return Ok(Vec::new()) };
    let series = delta_p_series(curve, xmax.max(10))?;
    Ok(accumulation_from_series(&series, xs))
}

pub fn accumulation_from_series(series: &PrimeSeries, xs: &[u64]) -> Vec<AccumulationPoint> {
    let (mut sw, mut su, mut sl) = (0.0, 0.0, 0.0);
    let mut rows = series.rows.iter().peekable();
    let mut out = Vec::with_capacity(xs.len());
    for &x in xs {
        while let Some(r) = rows.next_if(|r| r.p <= x) {
            let lw = (r.p as f64).ln();
            sw += lw;
            su += lw * r.u;
            sl += lw * r.lambda;
        }
        let (u_bar, lambda_bar) = (su / sw, sl / sw);
        out.push(AccumulationPoint { x, u_bar, lambda_bar, dev: (u_bar - 1.0).abs() + (lambda_bar - 1.0).abs() });
    }
    out
}

/// Fits `K = dev(x0) sqrt(x0)` at the first point and checks `dev(x) <= K / sqrt(x)` at the rest.
pub fn sqrt_x_transfer(points: &[AccumulationPoint]) -> Option<(f64, bool)> {
    let first = points.first()?;
    let k = first.dev * (first.x as f64).sqrt();
    let ok = points.iter().skip(1).all(|pt| pt.dev <= k / (pt.x as f64).sqrt());
    Some((k, ok))
}

/// Whether `p` is an odd prime with `p = 3 mod 4`.
pub fn is_inert_gaussian(p: u64) -> bool {
    p % 4 == 3 && is_prime(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c256() -> WeierstrassCurve {
        WeierstrassCurve::short(8, 0).unwrap()
    }

    #[test]
    fn small_series() {
        let s = delta_p_series(&c256(), 100).unwrap();
        assert_eq!(s.rows.len(), 24);
        let r3 = &s.rows[0];
        assert_eq!((r3.p, r3.a_p), (3, 0));
        let want = ((2.0 / 3f64.sqrt()).sqrt() - 1.0) * 2.0 * 3f64.sqrt();
        assert!((r3.delta - want).abs() < 1e-12);
        assert!((r3.delta - 0.2585).abs() < 1e-3);
        assert!(s.all_bounds_ok());
        for r in &s.rows {
            assert_eq!(r.class == RowClass::Inert, is_inert_gaussian(r.p), "p={}", r.p);
        }
    }

    #[test]
    fn ks_of_exact_quantiles_is_small() {
        let n = 1000;
        let vals: Vec<f64> = (0..n).map(|i| (std::f64::consts::PI * ((i as f64 + 0.5) / n as f64 - 0.5)).sin()).collect();
        assert!(ks_distance(&vals, arcsine_cdf) <= 0.5 / n as f64 + 1e-12);
    }

    #[test]
    fn histogram_bins() {
        let h = histogram(&[-0.05, 0.01, 0.09, 0.15], 0.1);
        assert_eq!(h.len(), 3);
        assert_eq!(h[1].count, 2);
    }

    #[test]
    fn accumulation_prefix_matches_direct() {
        let s = delta_p_series(&c256(), 500).unwrap();
        let pts = accumulation_from_series(&s, &[100, 500]);
        let (mut sw, mut su) = (0.0, 0.0);
        for r in s.rows.iter().filter(|r| r.p <= 100) {
            sw += (r.p as f64).ln();
            su += (r.p as f64).ln() * r.u;
        }
        assert!((pts[0].u_bar - su / sw).abs() < 1e-15);
    }

    #[test]
    fn bulk_domain() {
        let s = delta_p_series(&c256(), 100).unwrap();
        assert!(bulk_count(&s, 1.0).is_err());
        assert_eq!(bulk_count(&s, 0.5).unwrap().pi_x, 25);
    }
}
