//! The zeta operator, its DC-shifted variant, the golden-ratio block and the
//! interpolation obstruction.

use num_traits::Zero;
use serde::Serialize;

use crate::curves::{ap_count, WeierstrassCurve};
use crate::error::Result;
use crate::exactmath::{krein_pseudoinverse2, pseudoinverse2, quad_roots, rat, Cx, Matrix2, QuadExt, Ring};
use crate::pencil::Pencil2;

const J: [f64; 2] = [1.0, -1.0];

/// `u = 1/sqrt(2)`, `l = (u^5 - u)/2 = -3/(8 sqrt(2))`, a point of the zeta spectral curve.
pub fn zco_basepoint() -> (Cx, Cx) {
    let u = Cx::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    (u, (u.powu(5) - u) / 2.0)
}

/// The zeta pencil at its basepoint: `((-1/8, 3/8), (-3/8, 9/8))`.
pub fn zco_matrix() -> Matrix2<Cx> {
    let (u, l) = zco_basepoint();
    Pencil2::zco(&rat(1, 1)).matrix_cx(u, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZcoPinvTraces {
    /// Moore-Penrose inverse with respect to the indefinite form `J = diag(1, -1)`.
    pub krein: f64,
    /// Ordinary Moore-Penrose inverse.
    pub euclidean: f64,
}

pub fn zco_pinv_traces() -> Result<ZcoPinvTraces> {
    let m = zco_matrix();
    Ok(ZcoPinvTraces { krein: krein_pseudoinverse2(&m, J)?.trace().re, euclidean: pseudoinverse2(&m).trace().re })
}

/// `1 - t tr(A^+)` with the Krein pseudoinverse, whose trace is 1.
pub fn zco_euler_factor(t: Cx) -> Result<Cx> {
    let pinv = krein_pseudoinverse2(&zco_matrix(), J)?;
    Ok(Cx::new(1.0, 0.0) - t * pinv.trace())
}

/// Adds `diag(c, -c) u^-2` to the zeta pencil at `(u, (u^5 - u)/2)` and checks that
/// the trace is still `2u^2`.
pub fn zco_c_trace_invariance(c: &crate::exactmath::Rational, u: Cx) -> bool {
    if u.is_zero() {
        return false;
    }
    let l = (u.powu(5) - u) / 2.0;
    let base = Pencil2::zco(&rat(1, 1)).matrix_cx(u, l);
    let cc = Cx::from_rational(c) / (u * u);
    let shifted = base + Matrix2::diag(cc, -cc);
    let expected = 2.0 * u * u;
    (shifted.trace() - expected).norm() <= 1e-12 * 1f64.max(expected.norm())
}

/// Eigenvalues `(1 +- sqrt(5))/2` of `((3/2, 1/2), (1/2, -1/2))`, from its
/// characteristic polynomial `x^2 - x - 1`.
pub fn golden_ratio_spectrum() -> Result<(QuadExt, QuadExt)> {
    let m = Matrix2::new(rat(3, 2), rat(1, 2), rat(1, 2), rat(-1, 2));
    quad_roots(&rat(1, 1), &-m.trace(), &m.det())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub p: u64,
    pub q: u64,
    pub a_p: i64,
    pub a_q: i64,
    /// Origin slopes `-a_p` and `-a_q` that a single interpolant would need.
    pub slope_p: i64,
    pub slope_q: i64,
}

/// First pair among the first `k` good primes with different traces.
pub fn interpolation_obstruction(curve: &WeierstrassCurve, k: usize) -> Result<Option<ObstructionWitness>> {
    let mut seen: Vec<(u64, i64)> = Vec::new();
    let mut p = 2u64;
    while seen.len() < k {
        if crate::curves::is_prime(p) && curve.is_good(p) {
            let a = ap_count(curve, p, false)?;
            if let Some(&(p0, a0)) = seen.iter().find(|(_, a0)| *a0 != a) {
                return Ok(Some(ObstructionWitness { p: p0, q: p, a_p: a0, a_q: a, slope_p: -a0, slope_q: -a }));
            }
            seen.push((p, a));
        }
        p += 1;
    }
    Ok(None)
}
