use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, squarefree_split, Cx, Field, Rational, Ring};
use crate::error::{Error, Result};

/// `x + y*sqrt(d)` with rational `x, y`.
///
/// The radicand is kept canonical: `d` is a squarefree integer other than 0 or 1,
/// or `d == 0` exactly when `y == 0`. A rational radicand such as 2600 or 1/2 is
/// rewritten on construction (`sqrt(2600) = 10*sqrt(26)`, `sqrt(1/2) = sqrt(2)/2`),
/// so equal numbers have equal representations and the derived `PartialEq` is exact.
///
/// Values with different nonzero radicands do not mix. The `std::ops` impls panic on
/// a mismatch; the `try_*` methods return [`Error::RadicandMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    x: Rational,
    y: Rational,
    d: BigInt,
}

impl QuadExt {
    /// `x + y*sqrt(d)` for any rational radicand `d`.
    pub fn new(x: Rational, y: Rational, d: &Rational) -> Self {
        let root = Self::sqrt_of(d);
        Self::rational(x) + Self::rational(y) * root
    }

    pub fn rational(x: Rational) -> Self {
        QuadExt { x, y: Rational::zero(), d: BigInt::zero() }
    }

    /// `sqrt(r)` on the principal branch (`sqrt(-3) = i*sqrt(3)`).
    pub fn sqrt_of(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::rational(Rational::zero());
        }
        let nm = r.numer() * r.denom();
        let (s, k) = squarefree_split(&nm);
        let coeff = Rational::new(s, r.denom().clone());
        if k.is_one() {
            Self::rational(coeff)
        } else {
            QuadExt { x: Rational::zero(), y: coeff, d: k }
        }
    }

    fn from_parts(x: Rational, y: Rational, d: BigInt) -> Self {
        if y.is_zero() || d.is_zero() {
            QuadExt { x, y: Rational::zero(), d: BigInt::zero() }
        } else {
            QuadExt { x, y, d }
        }
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    /// Canonical squarefree radicand, 0 for a rational value.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::from_parts(self.x.clone(), -self.y.clone(), self.d.clone())
    }

    /// `x^2 - d*y^2`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - Rational::from_integer(self.d.clone()) * &self.y * &self.y
    }

    fn common_d(&self, rhs: &Self) -> Result<BigInt> {
        match (self.d.is_zero(), rhs.d.is_zero()) {
            (true, _) => Ok(rhs.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == rhs.d => Ok(self.d.clone()),
            _ => Err(Error::RadicandMismatch(self.d.to_string(), rhs.d.to_string())),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_d(rhs)?;
        Ok(Self::from_parts(&self.x + &rhs.x, &self.y + &rhs.y, d))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs.clone())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_d(rhs)?;
        let dr = Rational::from_integer(d.clone());
        let x = &self.x * &rhs.x + dr * &self.y * &rhs.y;
        let y = &self.x * &rhs.y + &self.y * &rhs.x;
        Ok(Self::from_parts(x, y, d))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.inv()?)
    }

    /// Exact sign for real values (`d > 0` or rational); `None` when `d < 0`.
    pub fn signum(&self) -> Option<i32> {
        if self.d.is_negative() {
            return None;
        }
        let sx = sign_of(&self.x);
        let sy = sign_of(&self.y);
        if sy == 0 || sx == sy {
            return Some(if sx == 0 { sy } else { sx });
        }
        if sx == 0 {
            return Some(sy);
        }
        // Opposite signs: compare x^2 with d*y^2.
        let lhs = &self.x * &self.x;
        let rhs = Rational::from_integer(self.d.clone()) * &self.y * &self.y;
        Some(match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sx,
            std::cmp::Ordering::Less => sy,
            std::cmp::Ordering::Equal => 0,
        })
    }

    pub fn to_cx(&self) -> Cx {
        let x = rational_to_f64(&self.x);
        let y = rational_to_f64(&self.y);
        let d = rational_to_f64(&Rational::from_integer(self.d.clone()));
        if d >= 0.0 {
            Cx::new(x + y * d.sqrt(), 0.0)
        } else {
            Cx::new(x, y * (-d).sqrt())
        }
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let y = if self.y.is_one() {
            String::new()
        } else if self.y == -Rational::one() {
            "-".to_string()
        } else {
            format!("({})*", self.y)
        };
        if self.x.is_zero() {
            write!(f, "{y}sqrt({})", self.d)
        } else {
            write!(f, "{} + {y}sqrt({})", self.x, self.d)
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("QuadExt radicand mismatch")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("QuadExt radicand mismatch")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("QuadExt radicand mismatch")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> Self {
        QuadExt { x: -self.x, y: -self.y, d: self.d }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Ring for QuadExt {
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Result<Self> {
        // d is squarefree and not 1, so the norm vanishes only at zero.
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero(" in QuadExt".into()));
        }
        let c = self.conj();
        Ok(Self::from_parts(c.x / &n, c.y / &n, c.d))
    }
}

/// Roots `(-B +- sqrt(B^2 - 4AC)) / (2A)`, plus branch first.
pub fn quad_roots(a: &Rational, b: &Rational, c: &Rational) -> Result<(QuadExt, QuadExt)> {
    if a.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    let disc = b * b - Rational::from_integer(4.into()) * a * c;
    let root = QuadExt::sqrt_of(&disc);
    let two_a = QuadExt::rational(a * Rational::from_integer(2.into()));
    let minus_b = QuadExt::rational(-b.clone());
    let plus = (minus_b.clone() + root.clone()).try_div(&two_a)?;
    let minus = (minus_b - root).try_div(&two_a)?;
    Ok((plus, minus))
}
