use std::ops::{Add, Mul, Sub};

use super::{Cx, Field, Ring};
use crate::error::{Error, Result};

/// 2x2 matrix `((e11, e12), (e21, e22))` over a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<T> {
    pub e11: T,
    pub e12: T,
    pub e21: T,
    pub e22: T,
}

impl<T: Ring> Matrix2<T> {
    pub fn new(e11: T, e12: T, e21: T, e22: T) -> Self {
        Matrix2 { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn diag(a: T, b: T) -> Self {
        Self::new(a, T::zero(), T::zero(), b)
    }

    pub fn trace(&self) -> T {
        self.e11.clone() + self.e22.clone()
    }

    pub fn det(&self) -> T {
        self.e11.clone() * self.e22.clone() - self.e12.clone() * self.e21.clone()
    }

    /// Classical adjugate, so that `adj(M) * M = det(M) * I`.
    pub fn adj(&self) -> Self {
        Self::new(self.e22.clone(), -self.e12.clone(), -self.e21.clone(), self.e11.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.e11.clone(), self.e21.clone(), self.e12.clone(), self.e22.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            c.clone() * self.e11.clone(),
            c.clone() * self.e12.clone(),
            c.clone() * self.e21.clone(),
            c.clone() * self.e22.clone(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix2<U> {
        Matrix2::new(f(&self.e11), f(&self.e12), f(&self.e21), f(&self.e22))
    }

    pub fn column(&self, k: usize) -> [T; 2] {
        match k {
            0 => [self.e11.clone(), self.e21.clone()],
            _ => [self.e12.clone(), self.e22.clone()],
        }
    }
}

impl<T: Field> Matrix2<T> {
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::DivisionByZero(" (singular matrix)".into()));
        }
        Ok(self.adj().scale(&d.inv()?))
    }
}

impl<T: Ring> Add for Matrix2<T> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.e11 + r.e11, self.e12 + r.e12, self.e21 + r.e21, self.e22 + r.e22)
    }
}

impl<T: Ring> Sub for Matrix2<T> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.e11 - r.e11, self.e12 - r.e12, self.e21 - r.e21, self.e22 - r.e22)
    }
}

impl<T: Ring> Mul for Matrix2<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let a = &self;
        Self::new(
            a.e11.clone() * r.e11.clone() + a.e12.clone() * r.e21.clone(),
            a.e11.clone() * r.e12.clone() + a.e12.clone() * r.e22.clone(),
            a.e21.clone() * r.e11.clone() + a.e22.clone() * r.e21.clone(),
            a.e21.clone() * r.e12.clone() + a.e22.clone() * r.e22.clone(),
        )
    }
}

impl Matrix2<Cx> {
    pub fn conj_transpose(&self) -> Self {
        Self::new(self.e11.conj(), self.e21.conj(), self.e12.conj(), self.e22.conj())
    }

    /// `J M^H J` for `J = diag(j1, j2)` with `j_k = +-1`.
    pub fn j_adjoint(&self, j: [f64; 2]) -> Self {
        let h = self.conj_transpose();
        Self::new(h.e11, h.e12 * (j[0] * j[1]), h.e21 * (j[0] * j[1]), h.e22)
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.e11.norm_sqr() + self.e12.norm_sqr() + self.e21.norm_sqr() + self.e22.norm_sqr()).sqrt()
    }
}

const RANK_TOL: f64 = 1e-12;

/// Moore-Penrose inverse of a complex 2x2 matrix.
///
/// Rank is decided by `|det| <= 1e-12 * ||M||_F^2`. A rank-1 matrix `M` has
/// `M^+ = M^H / ||M||_F^2`.
pub fn pseudoinverse2(m: &Matrix2<Cx>) -> Matrix2<Cx> {
    let s2 = m.frobenius_norm().powi(2);
    if s2 == 0.0 {
        return Matrix2::diag(Cx::new(0.0, 0.0), Cx::new(0.0, 0.0));
    }
    let det = m.det();
    if det.norm() > RANK_TOL * s2 {
        return m.adj().scale(&(Cx::new(1.0, 0.0) / det));
    }
    m.conj_transpose().scale(&Cx::new(1.0 / s2, 0.0))
}

/// Moore-Penrose inverse with respect to the indefinite metric `J = diag(j1, j2)`:
/// the four Penrose identities with `^H` replaced by the J-adjoint.
///
/// For rank 1 this is `M^[*] / tr(M M^[*])`, which fails when the range of `M` is
/// J-neutral (`tr(M M^[*]) = 0`). For a rank-1 J-self-adjoint matrix it equals the
/// group inverse `M / tr(M)^2`.
pub fn krein_pseudoinverse2(m: &Matrix2<Cx>, j: [f64; 2]) -> Result<Matrix2<Cx>> {
    let s2 = m.frobenius_norm().powi(2);
    if s2 == 0.0 {
        return Ok(Matrix2::diag(Cx::new(0.0, 0.0), Cx::new(0.0, 0.0)));
    }
    let det = m.det();
    if det.norm() > RANK_TOL * s2 {
        return Ok(m.adj().scale(&(Cx::new(1.0, 0.0) / det)));
    }
    let ms = m.j_adjoint(j);
    let t = (m.clone() * ms.clone()).trace();
    if t.norm() <= RANK_TOL * s2 * s2 {
        return Err(Error::Domain("range of M is J-neutral; no Krein pseudoinverse".into()));
    }
    Ok(ms.scale(&(Cx::new(1.0, 0.0) / t)))
}
