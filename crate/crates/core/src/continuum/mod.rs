//! Continuum limit: dispersion-independent arcsine integral, the arcsine law, and the
//! `chi_{-4}` L-series.

mod chi4;
mod quadrature;

pub use chi4::{
    chi4, dirichlet_l_chi4, eta_chi4, eta_functional_equation_residual, gamma, printed_functional_equation_residual,
    LSeriesValue,
};
pub use quadrature::{integrate_gk, QuadratureResult};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Cx;

/// Evaluation budget for one universality integral.
pub const MAX_EVALS: usize = 2_000_000;

/// A smooth odd increasing surjection `a: R -> (-1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dispersion {
    Tanh,
    Algebraic,
}

impl Dispersion {
    pub const ALL: [Dispersion; 2] = [Dispersion::Tanh, Dispersion::Algebraic];

    pub fn as_str(self) -> &'static str {
        match self {
            Dispersion::Tanh => "tanh",
            Dispersion::Algebraic => "algebraic",
        }
    }

    pub fn a(self, xi: f64) -> f64 {
        match self {
            Dispersion::Tanh => xi.tanh(),
            Dispersion::Algebraic => xi / (1.0 + xi * xi).sqrt(),
        }
    }

    pub fn a_prime(self, xi: f64) -> f64 {
        match self {
            Dispersion::Tanh => {
                let s = 1.0 / xi.cosh();
                s * s
            }
            Dispersion::Algebraic => (1.0 + xi * xi).powf(-1.5),
        }
    }

    /// `a'(xi) / (pi sqrt(1 - a^2))`, simplified so that no cancellation occurs as `a -> 1`.
    pub fn weight(self, xi: f64) -> f64 {
        match self {
            Dispersion::Tanh => 1.0 / (xi.cosh() * std::f64::consts::PI),
            Dispersion::Algebraic => 1.0 / ((1.0 + xi * xi) * std::f64::consts::PI),
        }
    }
}

impl std::str::FromStr for Dispersion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tanh" => Ok(Dispersion::Tanh),
            "algebraic" => Ok(Dispersion::Algebraic),
            other => Err(Error::Parse(format!("unknown dispersion {other:?}"))),
        }
    }
}

fn check_domain(z: Cx) -> Result<()> {
    if z.im == 0.0 && z.re.abs() <= 1.0 {
        return Err(Error::BranchCut(format!("z = {z} lies on the cut [-1, 1]")));
    }
    Ok(())
}

/// `int_0^inf w(xi) a(xi) / (z^2 - a(xi)^2) dxi` with `w = a'/(pi sqrt(1 - a^2))`,
/// computed on `r in [0, 1]` through `xi = r/(1 - r)`.
pub fn universality_integral(disp: Dispersion, z: Cx, tol: f64) -> Result<QuadratureResult> {
    check_domain(z)?;
    if z.re <= 0.0 {
        return Err(Error::Domain(format!("Re z must be positive, got {z}")));
    }
    let z2 = z * z;
    let f = move |r: f64| {
        if r >= 1.0 {
            return Cx::new(0.0, 0.0);
        }
        let one_m = 1.0 - r;
        let xi = r / one_m;
        let a = disp.a(xi);
        let jac = 1.0 / (one_m * one_m);
        let w = disp.weight(xi) * jac;
        if !w.is_finite() || w == 0.0 {
            return Cx::new(0.0, 0.0);
        }
        w * a / (z2 - a * a)
    };
    integrate_gk(f, 0.0, 1.0, tol, MAX_EVALS)
}

/// Principal complex `arcsin(w) = -i log(i w + sqrt(1 - w^2))`.
pub fn arcsin_cx(w: Cx) -> Cx {
    let i = Cx::new(0.0, 1.0);
    -i * (i * w + (Cx::new(1.0, 0.0) - w * w).sqrt()).ln()
}

/// `arcsin(1/z) / (pi sqrt(z^2 - 1))` on principal branches.
pub fn arcsine_closed_form(z: Cx) -> Result<Cx> {
    check_domain(z)?;
    let one = Cx::new(1.0, 0.0);
    Ok(arcsin_cx(one / z) / (std::f64::consts::PI * (z * z - one).sqrt()))
}

/// `1 / (pi sqrt(1 - t^2))` on `(-1, 1)`.
pub fn arcsine_pdf(t: f64) -> Result<f64> {
    if !(t.abs() < 1.0) {
        return Err(Error::Domain(format!("arcsine density needs |t| < 1, got {t}")));
    }
    Ok(1.0 / (std::f64::consts::PI * (1.0 - t * t).sqrt()))
}

/// `1/2 + arcsin(t)/pi`, clamped to `[0, 1]` outside `[-1, 1]`.
pub fn arcsine_cdf(t: f64) -> f64 {
    0.5 + t.clamp(-1.0, 1.0).asin() / std::f64::consts::PI
}
