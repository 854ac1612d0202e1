use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Field, Rational};

/// Invariants and Jacobian of `aX^4 + bX^3 + cX^2 + dX + e` (plain coefficients).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuarticReduction {
    #[serde(rename = "I", serialize_with = "crate::report::ser_rational")]
    pub i: Rational,
    #[serde(rename = "J", serialize_with = "crate::report::ser_rational")]
    pub j_inv: Rational,
    /// Jacobian `Y^2 = X^3 + A X + B`.
    #[serde(rename = "A", serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    #[serde(rename = "B", serialize_with = "crate::report::ser_rational")]
    pub b: Rational,
    #[serde(rename = "j", serialize_with = "crate::report::ser_rational")]
    pub j: Rational,
}

/// `I = 12ae - 3bd + c^2`, `J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3`, Jacobian
/// `Y^2 = X^3 - 27 I X - 27 J`.
pub fn quartic_to_weierstrass(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
) -> Result<QuarticReduction> {
    let r = |n: i64| rat(n, 1);
    let i = r(12) * a * e - r(3) * b * d + c * c;
    let j_inv = r(72) * a * c * e + r(9) * b * c * d - r(27) * a * d * d - r(27) * b * b * e - r(2) * c * c * c;
    let big_a = r(-27) * &i;
    let big_b = r(-27) * &j_inv;
    let four_a3 = r(4) * &big_a * &big_a * &big_a;
    let denom = &four_a3 + r(27) * &big_b * &big_b;
    if denom.is_zero() {
        return Err(Error::DegenerateQuartic);
    }
    let j = r(1728) * four_a3 / denom;
    Ok(QuarticReduction { i, j_inv, a: big_a, b: big_b, j })
}

/// `j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)` for the Legendre cross-ratio `l`.
pub fn legendre_j<T: Field>(l: &T) -> Result<T> {
    let one = T::one();
    let lm1 = l.clone() - one.clone();
    let den = l.clone() * l.clone() * lm1.clone() * lm1;
    if den.is_zero() {
        return Err(Error::Pole("cross-ratio is 0 or 1".into()));
    }
    let q = l.clone() * l.clone() - l.clone() + one;
    let num = T::from_rational(&rat(256, 1)) * q.clone() * q.clone() * q;
    num.div(&den)
}
