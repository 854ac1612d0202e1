//! The 2x2 J-self-adjoint causal pencil `A(u; l) = u^2 I - diag(E1, E2) - l u^-1 V`
//! with `V = ((a, b), (-b, d))` and `J = diag(1, -1)`.

mod gram;
mod jmap;
mod monomial;

pub use gram::{eta_gram, lambda_evenness_check, pontryagin_index, EtaGram};
pub use jmap::{j1728_locus_q, j_formula, j_formula_tau_sq};
pub use monomial::{monomial_gram8, MonomialGram};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Cx, Field, LaurentBiPoly, Matrix2, QuadExt, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Pencil2 {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub e1: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub e2: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d: Rational,
    /// `b^2`; negative values mean an imaginary coupling.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b_sq: Rational,
    /// `b` itself when `b^2` is a rational square (sign as given or nonnegative root).
    #[serde(skip)]
    pub b: Option<Rational>,
}

/// Nonnegative rational square root, if there is one.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r < &Rational::zero() {
        return None;
    }
    let q = QuadExt::sqrt_of(r);
    q.is_rational().then(|| q.x().clone())
}

impl Pencil2 {
    /// From `(tau, delta, Delta)` on the background `diag(E, -E)`:
    /// `a = (tau + delta)/2`, `d = (tau - delta)/2`, `b^2 = Delta - ad`.
    pub fn from_tdd(tau: &Rational, delta: &Rational, big_delta: &Rational, e: &Rational) -> Self {
        let two = rat(2, 1);
        let a = (tau + delta) / &two;
        let d = (tau - delta) / &two;
        let b_sq = big_delta - &a * &d;
        let b = rational_sqrt(&b_sq);
        Pencil2 { e1: e.clone(), e2: -e.clone(), a, d, b_sq, b }
    }

    pub fn from_entries(e1: Rational, e2: Rational, a: Rational, b: Rational, d: Rational) -> Self {
        let b_sq = &b * &b;
        Pencil2 { e1, e2, a, d, b_sq, b: Some(b) }
    }

    /// Zeta operator: `(a, b, d) = (1, 1, -1)` on `diag(E, -E)`.
    pub fn zco(e: &Rational) -> Self {
        Self::from_entries(e.clone(), -e.clone(), rat(1, 1), rat(1, 1), rat(-1, 1))
    }

    /// `(tau, delta, Delta) = (2, 0, 2)`, `E = 1`.
    pub fn canonical() -> Self {
        Self::from_tdd(&rat(2, 1), &rat(0, 1), &rat(2, 1), &rat(1, 1))
    }

    pub fn tau(&self) -> Rational {
        &self.a + &self.d
    }

    pub fn delta(&self) -> Rational {
        &self.a - &self.d
    }

    pub fn big_delta(&self) -> Rational {
        &self.a * &self.d + &self.b_sq
    }

    /// `(tau^2 - delta^2)/4 - Delta`, which equals `-b^2`.
    pub fn mu(&self) -> Rational {
        let t = self.tau();
        let dl = self.delta();
        (&t * &t - &dl * &dl) / rat(4, 1) - self.big_delta()
    }

    /// `P = u^6 - (E1+E2)u^4 + E1E2 u^2 - l[(a+d)u^3 - (aE2 + dE1)u] + l^2 (ad + b^2)`,
    /// so that `det A = P / u^2`.
    pub fn spectral_poly(&self) -> LaurentBiPoly {
        let m = |c: Rational, i: i64, j: u32| LaurentBiPoly::monomial(c, i, j);
        m(rat(1, 1), 6, 0)
            + m(-(&self.e1 + &self.e2), 4, 0)
            + m(&self.e1 * &self.e2, 2, 0)
            + m(-self.tau(), 3, 1)
            + m(&self.a * &self.e2 + &self.d * &self.e1, 1, 1)
            + m(self.big_delta(), 0, 2)
    }

    /// `P(u, l)` evaluated in any ring.
    pub fn p_value<T: Ring>(&self, u: &T, l: &T) -> T {
        let r = |x: &Rational| T::from_rational(x);
        let u2 = u.clone() * u.clone();
        let u3 = u2.clone() * u.clone();
        let u4 = u2.clone() * u2.clone();
        let u6 = u4.clone() * u2.clone();
        u6 - r(&(&self.e1 + &self.e2)) * u4 + r(&(&self.e1 * &self.e2)) * u2
            - l.clone() * (r(&self.tau()) * u3 - r(&(&self.a * &self.e2 + &self.d * &self.e1)) * u.clone())
            + l.clone() * l.clone() * r(&self.big_delta())
    }

    /// Entries `(A11, U12, U21, A22)` with `A12 = b U12` and `A21 = b U21`.
    pub(crate) fn unit_entries(&self) -> [LaurentBiPoly; 4] {
        let m = |c: Rational, i: i64, j: u32| LaurentBiPoly::monomial(c, i, j);
        let a11 = m(rat(1, 1), 2, 0) + m(-self.e1.clone(), 0, 0) + m(-self.a.clone(), -1, 1);
        let a22 = m(rat(1, 1), 2, 0) + m(-self.e2.clone(), 0, 0) + m(-self.d.clone(), -1, 1);
        let u12 = m(rat(-1, 1), -1, 1);
        let u21 = m(rat(1, 1), -1, 1);
        [a11, u12, u21, a22]
    }

    fn b_or_err(&self) -> Result<&Rational> {
        self.b.as_ref().ok_or_else(|| Error::IrrationalCoupling(self.b_sq.to_string()))
    }

    /// The pencil matrix as Laurent polynomials; needs rational `b`.
    pub fn matrix(&self) -> Result<Matrix2<LaurentBiPoly>> {
        let b = self.b_or_err()?;
        let [a11, u12, u21, a22] = self.unit_entries();
        Ok(Matrix2::new(a11, u12.scale(b), u21.scale(b), a22))
    }

    /// Columns `phi_1, phi_2` of `adj A`, from the 2x2 cofactors.
    pub fn adjugate_columns(&self) -> Result<[[LaurentBiPoly; 2]; 2]> {
        let adj = self.matrix()?.adj();
        Ok([adj.column(0), adj.column(1)])
    }

    /// Numeric pencil matrix at `(u, l)`; an imaginary `b` is allowed.
    pub fn matrix_cx(&self, u: Cx, l: Cx) -> Matrix2<Cx> {
        let f = |r: &Rational| Cx::from_rational(r);
        let b = Cx::from_rational(&self.b_sq).sqrt();
        let b = match &self.b {
            Some(br) => f(br),
            None => b,
        };
        let k = l / u;
        Matrix2::new(
            u * u - f(&self.e1) - k * f(&self.a),
            -k * b,
            k * b,
            u * u - f(&self.e2) - k * f(&self.d),
        )
    }

    /// Resolvent trace and determinant from the closed forms
    /// `tr R = (2u^4 - (E1+E2)u^2 - tau l u)/P` and `det R = u^2/P`.
    /// Rejects `|P| < tol * max(1, |u|^6)`.
    pub fn resolvent_tr_det_cx(&self, u: Cx, l: Cx, tol: f64) -> Result<(Cx, Cx)> {
        let p = self.p_value(&u, &l);
        let scale = 1f64.max(u.norm().powi(6));
        if p.norm() < tol * scale {
            return Err(Error::OnShell);
        }
        let f = |r: &Rational| Cx::from_rational(r);
        let u2 = u * u;
        let num = 2.0 * u2 * u2 - f(&(&self.e1 + &self.e2)) * u2 - f(&self.tau()) * l * u;
        Ok((num / p, u2 / p))
    }

    /// `(tr R, det R, P)` on the slice `l = k u`, where everything depends on `w = u^2` only:
    /// `P = w^3 - (E1+E2)w^2 + E1E2 w - tau w^2 k + (aE2 + dE1) w k + Delta w k^2`,
    /// `tr R = (2w^2 - (E1+E2)w - tau w k)/P` and `det R = w/P`.
    pub fn resolvent_on_slice<T: Field>(&self, w: &T, k: &T) -> Result<(T, T, T)> {
        let f = |r: &Rational| T::from_rational(r);
        let w2 = w.clone() * w.clone();
        let s = f(&(&self.e1 + &self.e2));
        let p = w2.clone() * w.clone() - s.clone() * w2.clone() + f(&(&self.e1 * &self.e2)) * w.clone()
            - f(&self.tau()) * w2.clone() * k.clone()
            + f(&(&self.a * &self.e2 + &self.d * &self.e1)) * w.clone() * k.clone()
            + f(&self.big_delta()) * w.clone() * k.clone() * k.clone();
        if p.is_zero() {
            return Err(Error::OnShell);
        }
        let num = f(&rat(2, 1)) * w2 - s * w.clone() - f(&self.tau()) * w.clone() * k.clone();
        Ok((num.div(&p)?, w.div(&p)?, p))
    }

    /// Same quantities by inverting the numeric 2x2 matrix directly.
    pub fn resolvent_direct_cx(&self, u: Cx, l: Cx) -> Result<(Cx, Cx)> {
        let r = self.matrix_cx(u, l).inverse()?;
        Ok((r.trace(), r.det()))
    }

    /// Exact closed forms in any field; `P = 0` is an on-shell error.
    pub fn resolvent_tr_det_exact<T: Field>(&self, u: &T, l: &T) -> Result<(T, T)> {
        let p = self.p_value(u, l);
        if p.is_zero() {
            return Err(Error::OnShell);
        }
        let f = |r: &Rational| T::from_rational(r);
        let u2 = u.clone() * u.clone();
        let num = f(&rat(2, 1)) * u2.clone() * u2.clone() - f(&(&self.e1 + &self.e2)) * u2.clone()
            - f(&self.tau()) * l.clone() * u.clone();
        Ok((num.div(&p)?, u2.div(&p)?))
    }
}

/// Free-function form of [`Pencil2::from_tdd`].
pub fn pencil_from_tdd(tau: &Rational, delta: &Rational, big_delta: &Rational, e: &Rational) -> Pencil2 {
    Pencil2::from_tdd(tau, delta, big_delta, e)
}

pub fn spectral_poly(p: &Pencil2) -> LaurentBiPoly {
    p.spectral_poly()
}

pub fn adjugate_columns(p: &Pencil2) -> Result<[[LaurentBiPoly; 2]; 2]> {
    p.adjugate_columns()
}

/// Closed-form resolvent trace and determinant at a numeric point.
pub fn resolvent_tr_det(p: &Pencil2, u: Cx, l: Cx, tol: f64) -> Result<(Cx, Cx)> {
    p.resolvent_tr_det_cx(u, l, tol)
}
