//! The character `chi_{-4}`, its L-series on `s > 0`, and the eta functional equation.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// `chi_{-4}(n)`: 0 for even `n`, 1 for `n = 1 mod 4`, -1 for `n = 3 mod 4`.
pub fn chi4(n: i64) -> i32 {
    match n.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LSeriesValue {
    pub s: f64,
    pub value: f64,
    /// Difference between the last two accelerated estimates.
    pub estimated_error: f64,
    pub terms: usize,
}

/// Repeated pairwise averaging of the partial sums (Euler transform).
fn averaged(partials: &[f64]) -> f64 {
    let mut row = partials.to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    row[0]
}

/// Partial sums of `sum_k (-1)^k (2k+1)^-s`.
pub fn partial_sums(s: f64, n: usize) -> Vec<f64> {
    let mut acc = 0.0;
    (0..n)
        .map(|k| {
            let term = (2.0 * k as f64 + 1.0).powf(-s);
            acc += if k % 2 == 0 { term } else { -term };
            acc
        })
        .collect()
}

/// `L(s, chi_{-4})` for `s > 0`, doubling the term count until two successive
/// accelerated values agree to `tol`.
pub fn dirichlet_l_chi4(s: f64, tol: f64) -> Result<LSeriesValue> {
    if !(s > 0.0) {
        return Err(Error::NotImplemented(format!("L(s, chi_-4) series path needs s > 0, got {s}")));
    }
    let mut n = 16;
    let mut prev = averaged(&partial_sums(s, n));
    loop {
        n *= 2;
        let cur = averaged(&partial_sums(s, n));
        let err = (cur - prev).abs();
        if err <= tol {
            return Ok(LSeriesValue { s, value: cur, estimated_error: err, terms: n });
        }
        if n >= 1 << 14 {
            return Err(Error::Quadrature(format!("L-series at s={s} stalled at error {err:.3e}")));
        }
        prev = cur;
    }
}

/// `eta(s) = 2 L(s, chi_{-4})`.
pub fn eta_chi4(s: f64, tol: f64) -> Result<f64> {
    Ok(2.0 * dirichlet_l_chi4(s, tol)?.value)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Real Gamma function (Lanczos, with reflection below 1/2).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

const SERIES_TOL: f64 = 1e-13;

/// `|eta(s) - 2 2^s pi^(s-1) 4^(1/2-s) cos(pi s/2) Gamma(1-s) L(1-s)|` for `s in (0, 1)`.
pub fn eta_functional_equation_residual(s: f64) -> Result<f64> {
    check_strip(s)?;
    let rhs = 2.0
        * 2f64.powf(s)
        * PI.powf(s - 1.0)
        * 4f64.powf(0.5 - s)
        * (PI * s / 2.0).cos()
        * gamma(1.0 - s)
        * dirichlet_l_chi4(1.0 - s, SERIES_TOL)?.value;
    Ok((eta_chi4(s, SERIES_TOL)? - rhs).abs())
}

/// Residual of the variant with `sin(pi s/2)` and no conductor factor; it vanishes
/// only at `s = 1/2`.
pub fn printed_functional_equation_residual(s: f64) -> Result<f64> {
    check_strip(s)?;
    let rhs = 2.0
        * 2f64.powf(s)
        * PI.powf(s - 1.0)
        * (PI * s / 2.0).sin()
        * gamma(1.0 - s)
        * dirichlet_l_chi4(1.0 - s, SERIES_TOL)?.value;
    Ok((eta_chi4(s, SERIES_TOL)? - rhs).abs())
}

fn check_strip(s: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("functional equation check needs 0 < s < 1, got {s}")));
    }
    Ok(())
}
