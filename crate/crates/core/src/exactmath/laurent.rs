use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Rational, Ring};

/// Polynomial in `lambda`: exponent -> coefficient, zeros never stored.
pub type LambdaPoly = BTreeMap<u32, Rational>;

/// Finite sum of `c * u^i * lambda^j` with `i` any integer and `j >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentBiPoly {
    terms: BTreeMap<(i64, u32), Rational>,
}

impl LaurentBiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * u^i * lambda^j`.
    pub fn monomial(c: Rational, i: i64, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, u32), Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in it {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: i64, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i64, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// `f(-u, lambda)`.
    pub fn negate_u(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), v)| {
            let v = if i.rem_euclid(2) == 1 { -v.clone() } else { v.clone() };
            ((i, j), v)
        }))
    }

    /// Multiply by `u^k`.
    pub fn shift_u(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), v)| ((i + k, j), v.clone())))
    }

    /// Smallest and largest `u` exponents, `None` for the zero polynomial.
    pub fn u_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|k| k.0).min()?;
        let hi = self.terms.keys().map(|k| k.0).max()?;
        Some((lo, hi))
    }

    pub fn lambda_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Coefficient family of `u^i`, as a polynomial in `lambda`.
    pub fn u_coefficient(&self, i: i64) -> LambdaPoly {
        self.terms
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(k, v)| (k.1, v.clone()))
            .collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `lambda` by `sub` (itself a Laurent polynomial).
    pub fn substitute_lambda(&self, sub: &LaurentBiPoly) -> Self {
        let max_j = self.lambda_degree().unwrap_or(0);
        let mut powers = vec![Self::constant(Rational::one())];
        for k in 1..=max_j as usize {
            let next = &powers[k - 1] * sub;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out = out + powers[j as usize].shift_u(i).scale(c);
        }
        out
    }
}

/// Coefficient of `u^-1 * lambda^j` for each `j`.
pub fn residue_at_zero(f: &LaurentBiPoly) -> LambdaPoly {
    f.u_coefficient(-1)
}

impl Add<&LaurentBiPoly> for &LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn add(self, rhs: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub<&LaurentBiPoly> for &LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn sub(self, rhs: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentBiPoly> for &LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn mul(self, rhs: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = LaurentBiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Add for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn neg(self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Zero for LaurentBiPoly {
    fn zero() -> Self {
        LaurentBiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentBiPoly {
    fn one() -> Self {
        LaurentBiPoly::constant(Rational::one())
    }
}

impl Ring for LaurentBiPoly {
    fn from_rational(r: &Rational) -> Self {
        LaurentBiPoly::constant(r.clone())
    }
}

impl fmt::Display for LaurentBiPoly {
    /// Highest `u` power first, e.g. `u^6 - 2*u^3*l - u^2 + 2*l^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("u".into()),
                _ => factors.push(format!("u^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("l".into()),
                _ => factors.push(format!("l^{j}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
