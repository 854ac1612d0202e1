//! Scalars, Laurent polynomials and 2x2 matrices.
//!
//! The exact tier uses [`Rational`] and [`QuadExt`]; the numeric tier uses [`Cx`].

mod laurent;
mod matrix;
mod poly;
mod quadext;
mod rational;

pub use laurent::{residue_at_zero, LambdaPoly, LaurentBiPoly};
pub use matrix::{krein_pseudoinverse2, pseudoinverse2, Matrix2};
pub use poly::{poly_divrem, Poly};
pub use quadext::{quad_roots, QuadExt};
pub use rational::{parse_rational, rat, rat_from_f64_exact, rational_to_f64, squarefree_split, Rational};

use std::fmt::Debug;

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;

/// Double-precision complex scalar.
pub type Cx = num_complex::Complex64;

/// Commutative ring with unit, as far as the algorithms here need it.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero(String::new()));
        }
        Ok(self.recip())
    }
}

impl Ring for Cx {
    fn from_rational(r: &Rational) -> Self {
        Cx::new(rational_to_f64(r), 0.0)
    }
}

impl Field for Cx {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero(String::new()));
        }
        Ok(Cx::new(1.0, 0.0) / self)
    }
}
