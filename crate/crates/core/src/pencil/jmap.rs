use crate::error::{Error, Result};
use crate::exactmath::{rat, Field, Ring};

/// `j = 16 (tau^2 delta^2 + 12 Delta mu)^3 / (Delta^2 mu^2 (tau^2 - 4 Delta)(delta^2 + 4 Delta))`
/// with `mu = (tau^2 - delta^2)/4 - Delta`, taking `tau^2` directly so that loci with
/// irrational `tau` stay exact.
pub fn j_formula_tau_sq<T: Field>(tau_sq: &T, delta: &T, big_delta: &T) -> Result<T> {
    let c = |n: i64| T::from_rational(&rat(n, 1));
    let d2 = delta.clone() * delta.clone();
    let mu = (tau_sq.clone() - d2.clone()).div(&c(4))? - big_delta.clone();
    let factors = [
        (big_delta.clone(), "Delta"),
        (mu.clone(), "mu"),
        (tau_sq.clone() - c(4) * big_delta.clone(), "tau^2 - 4 Delta"),
        (d2.clone() + c(4) * big_delta.clone(), "delta^2 + 4 Delta"),
    ];
    if let Some((_, name)) = factors.iter().find(|(f, _)| f.is_zero()) {
        return Err(Error::SingularLocus(name));
    }
    let base = tau_sq.clone() * d2 + c(12) * big_delta.clone() * mu.clone();
    let num = c(16) * base.clone() * base.clone() * base;
    let den = big_delta.clone() * big_delta.clone() * mu.clone() * mu * factors[2].0.clone() * factors[3].0.clone();
    num.div(&den)
}

/// [`j_formula_tau_sq`] at `tau^2 = tau * tau`.
pub fn j_formula<T: Field>(tau: &T, delta: &T, big_delta: &T) -> Result<T> {
    j_formula_tau_sq(&(tau.clone() * tau.clone()), delta, big_delta)
}

/// `Q = -2 tau^2 delta^2 - 9 tau^2 Delta + 9 delta^2 Delta + 36 Delta^2`; the third
/// component of the `j = 1728` locus is `{Q = 0}`.
pub fn j1728_locus_q<T: Ring>(tau_sq: &T, delta: &T, big_delta: &T) -> T {
    let c = |n: i64| T::from_rational(&rat(n, 1));
    let d2 = delta.clone() * delta.clone();
    c(-2) * tau_sq.clone() * d2.clone() - c(9) * tau_sq.clone() * big_delta.clone()
        + c(9) * d2 * big_delta.clone()
        + c(36) * big_delta.clone() * big_delta.clone()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QuadExt;
    use num_traits::Zero;

    #[test]
    fn canonical_point_is_1728() {
        assert_eq!(j_formula(&rat(2, 1), &rat(0, 1), &rat(2, 1)).unwrap(), rat(1728, 1));
    }

    #[test]
    fn q_witness_is_1728() {
        assert_eq!(j_formula_tau_sq(&rat(45, 11), &rat(1, 1), &rat(1, 1)).unwrap(), rat(1728, 1));
        assert_eq!(j1728_locus_q(&rat(45, 11), &rat(1, 1), &rat(1, 1)), rat(0, 1));
    }

    #[test]
    fn q_values() {
        assert_eq!(j1728_locus_q(&rat(4, 1), &rat(0, 1), &rat(2, 1)), rat(72, 1));
        assert_eq!(j1728_locus_q(&rat(0, 1), &rat(1, 1), &rat(1, 1)), rat(45, 1));
    }

    #[test]
    fn j_zero_point_exact() {
        // 12 D^2 - 240 D - 81 = 0, positive root 10 + sqrt(427)/2
        let d = QuadExt::new(rat(10, 1), rat(1, 2), &rat(427, 1));
        let q = |n: i64| QuadExt::rational(rat(n, 1));
        let check = q(12) * d.clone() * d.clone() - q(240) * d.clone() - q(81);
        assert!(check.is_zero());
        assert!(j_formula(&q(-9), &q(-1), &d).unwrap().is_zero());
    }

    #[test]
    fn singular_factors_named() {
        assert_eq!(j_formula(&rat(2, 1), &rat(0, 1), &rat(0, 1)), Err(Error::SingularLocus("Delta")));
        assert_eq!(j_formula(&rat(2, 1), &rat(0, 1), &rat(1, 1)), Err(Error::SingularLocus("mu")));
        assert_eq!(j_formula(&rat(4, 1), &rat(1, 1), &rat(4, 1)), Err(Error::SingularLocus("tau^2 - 4 Delta")));
    }
}
