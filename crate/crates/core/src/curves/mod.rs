//! Elliptic curves over Q, Frobenius traces by point counting, and quartic reduction.

mod count;
mod primes;
mod quartic;

pub use count::{ap_count, ap_count_exhaustive, ap_table, legendre_symbol, ApEntry, ApTable, PrimeClass};
pub use primes::{is_prime, prime_pi, primes_up_to};
pub use quartic::{legendre_j, quartic_to_weierstrass, QuarticReduction};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

/// Standard invariants of a Weierstrass model.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Invariants {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b2: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b4: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b6: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b8: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub c4: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub c6: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub discriminant: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub j: Rational,
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`, nonsingular.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve {
    a: [Rational; 5],
    label: Option<String>,
    inv: Invariants,
}

fn invariants_of(a: &[Rational; 5]) -> Option<Invariants> {
    let [a1, a2, a3, a4, a6] = a;
    let r = |n: i64| rat(n, 1);
    let b2 = a1 * a1 + r(4) * a2;
    let b4 = r(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + r(4) * a6;
    let b8 = a1 * a1 * a6 + r(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = &b2 * &b2 - r(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + r(36) * &b2 * &b4 - r(216) * &b6;
    let disc = (&c4 * &c4 * &c4 - &c6 * &c6) / r(1728);
    if disc.is_zero() {
        return None;
    }
    let j = &c4 * &c4 * &c4 / &disc;
    Some(Invariants { b2, b4, b6, b8, c4, c6, discriminant: disc, j })
}

impl WeierstrassCurve {
    pub fn new(a: [Rational; 5], label: Option<String>) -> Result<Self> {
        let inv = invariants_of(&a).ok_or(Error::SingularCurve)?;
        Ok(WeierstrassCurve { a, label, inv })
    }

    /// Integral model `[a1, a2, a3, a4, a6]`.
    pub fn from_ints(a: [i64; 5], label: Option<&str>) -> Result<Self> {
        Self::new(a.map(|x| rat(x, 1)), label.map(str::to_string))
    }

    /// Short model `y^2 = x^3 + A x + B`.
    pub fn short(a4: i64, a6: i64) -> Result<Self> {
        Self::from_ints([0, 0, 0, a4, a6], None)
    }

    pub fn coefficients(&self) -> &[Rational; 5] {
        &self.a
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn invariants(&self) -> &Invariants {
        &self.inv
    }

    pub fn j(&self) -> &Rational {
        &self.inv.j
    }

    /// Reduction of the coefficients mod `p`, or `None` when `p` divides a denominator.
    pub fn coefficients_mod(&self, p: u64) -> Option<[u64; 5]> {
        let mut out = [0u64; 5];
        for (k, c) in self.a.iter().enumerate() {
            out[k] = rational_mod(c, p)?;
        }
        Some(out)
    }

    /// True when the model has good reduction at `p`.
    pub fn is_good(&self, p: u64) -> bool {
        self.coefficients_mod(p).is_some()
            && rational_mod(&self.inv.discriminant, p).is_some_and(|d| d != 0)
    }

    /// Human-readable equation, e.g. `y^2 + y = x^3`.
    pub fn equation(&self) -> String {
        let [a1, a2, a3, a4, a6] = &self.a;
        let mut lhs = String::from("y^2");
        push_term(&mut lhs, a1, "xy");
        push_term(&mut lhs, a3, "y");
        let mut rhs = String::from("x^3");
        push_term(&mut rhs, a2, "x^2");
        push_term(&mut rhs, a4, "x");
        push_term(&mut rhs, a6, "");
        format!("{lhs} = {rhs}")
    }
}

fn push_term(s: &mut String, c: &Rational, var: &str) {
    if c.is_zero() {
        return;
    }
    let sign = if c.is_negative() { '-' } else { '+' };
    let mag = c.abs();
    if var.is_empty() {
        s.push_str(&format!(" {sign} {mag}"));
    } else if mag == rat(1, 1) {
        s.push_str(&format!(" {sign} {var}"));
    } else {
        s.push_str(&format!(" {sign} {mag}{var}"));
    }
}

/// `r mod p` for a rational whose denominator is prime to `p`.
pub(crate) fn rational_mod(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    let num = r.numer().mod_floor(&pb).to_u64()?;
    Some(mulmod(num, modinv(den, p)?, p))
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn modinv(a: u64, p: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, p as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(p as i128) as u64)
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// The standard invariants `(b2, b4, b6, b8, c4, c6, disc, j)`.
pub fn curve_invariants(curve: &WeierstrassCurve) -> Invariants {
    curve.invariants().clone()
}

/// All primes `p <= x` of good reduction, ascending.
pub fn good_primes(curve: &WeierstrassCurve, x: u64) -> Vec<u64> {
    primes_up_to(x).into_iter().filter(|&p| curve.is_good(p)).collect()
}

/// `a_p^2 <= 4p`.
pub fn hasse_check(a_p: i64, p: u64) -> bool {
    (a_p as i128) * (a_p as i128) <= 4 * p as i128
}

/// For `p = 1 mod 4`, the four traces `{+-2a, +-2b}` where `a^2 + b^2 = p`,
/// `a` odd and `b` even, ascending.
pub fn cornacchia_candidates(p: u64) -> Result<Vec<i64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::InertPrime(p));
    }
    // x^2 = -1 mod p from any non-residue c: x = c^((p-1)/4).
    let c = (2..p).find(|&c| powmod(c, (p - 1) / 2, p) == p - 1).ok_or(Error::NotPrime(p))?;
    let x = powmod(c, (p - 1) / 4, p);
    // Euclid on (p, x) until the remainder drops below sqrt(p).
    let (mut r0, mut r1) = (p, x);
    while r1 * r1 > p {
        let t = r0 % r1;
        r0 = r1;
        r1 = t;
    }
    let a = r1;
    let b2 = p - a * a;
    let b = (b2 as f64).sqrt().round() as u64;
    debug_assert_eq!(b * b, b2);
    let (odd, even) = if a % 2 == 1 { (a, b) } else { (b, a) };
    let mut v = vec![
        -2 * odd as i64,
        2 * odd as i64,
        -2 * even as i64,
        2 * even as i64,
    ];
    v.sort_unstable();
    Ok(v)
}
