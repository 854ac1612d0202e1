use serde::Serialize;

use super::{hasse_check, is_prime, mulmod, powmod, primes_up_to, WeierstrassCurve};
use crate::error::{Error, Result};

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre_symbol(a: u64, p: u64) -> i64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if powmod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `p + 1 - #E(F_p)` by enumerating every affine point plus the point at infinity.
///
/// Works at bad primes too (it then counts points of the singular reduction).
pub fn ap_count_exhaustive(curve: &WeierstrassCurve, p: u64) -> Result<i64> {
    let [a1, a2, a3, a4, a6] = curve.coefficients_mod(p).ok_or(Error::BadReduction(p))?;
    // Count solutions y of y^2 + (a1 x + a3) y - f(x) = 0 for each x.
    let mut points: u64 = 1;
    for x in 0..p {
        let fx = (mulmod(mulmod(x, x, p), x, p) + mulmod(a2, mulmod(x, x, p), p) + mulmod(a4, x, p) + a6) % p;
        let lin = (mulmod(a1, x, p) + a3) % p;
        for y in 0..p {
            let lhs = (mulmod(y, y, p) + mulmod(lin, y, p)) % p;
            if lhs == fx {
                points += 1;
            }
        }
    }
    Ok(p as i64 + 1 - points as i64)
}

/// Frobenius trace `a_p = p + 1 - #E(F_p)`.
///
/// For `p > 3` the model is completed to `g(x) = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2`
/// and `a_p = -sum_x (g(x)/p)` with a per-prime table of squares; `p <= 3` is counted
/// exhaustively. Bad primes are rejected unless `force`, in which case the singular
/// reduction is counted exhaustively.
pub fn ap_count(curve: &WeierstrassCurve, p: u64, force: bool) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !curve.is_good(p) {
        if force {
            return ap_count_exhaustive(curve, p);
        }
        return Err(Error::BadReduction(p));
    }
    if p <= 3 {
        return ap_count_exhaustive(curve, p);
    }
    let [a1, a2, a3, a4, a6] = curve.coefficients_mod(p).ok_or(Error::BadReduction(p))?;
    let mut is_square = vec![false; p as usize];
    for y in 1..p {
        is_square[mulmod(y, y, p) as usize] = true;
    }
    let mut sum: i64 = 0;
    for x in 0..p {
        let x2 = mulmod(x, x, p);
        let cubic = (mulmod(x2, x, p) + mulmod(a2, x2, p) + mulmod(a4, x, p) + a6) % p;
        let lin = (mulmod(a1, x, p) + a3) % p;
        let g = (mulmod(4, cubic, p) + mulmod(lin, lin, p)) % p;
        if g != 0 {
            sum += if is_square[g as usize] { 1 } else { -1 };
        }
    }
    Ok(-sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeClass {
    Good,
    Bad,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApEntry {
    pub p: u64,
    pub a_p: i64,
    pub class: PrimeClass,
}

/// Frobenius traces of one curve, ascending in `p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApTable {
    pub label: String,
    pub entries: Vec<ApEntry>,
}

impl ApTable {
    pub fn get(&self, p: u64) -> Option<i64> {
        self.entries.iter().find(|e| e.p == p).map(|e| e.a_p)
    }

    /// Every good entry obeys the Hasse bound.
    pub fn hasse_ok(&self) -> bool {
        self.entries.iter().filter(|e| e.class == PrimeClass::Good).all(|e| hasse_check(e.a_p, e.p))
    }
}

/// Traces for all primes `<= max_p`. Bad primes are included (counted exhaustively on
/// the singular reduction) when `include_bad`, otherwise skipped.
pub fn ap_table(curve: &WeierstrassCurve, max_p: u64, include_bad: bool) -> Result<ApTable> {
    let mut entries = Vec::new();
    for p in primes_up_to(max_p) {
        if curve.is_good(p) {
            entries.push(ApEntry { p, a_p: ap_count(curve, p, false)?, class: PrimeClass::Good });
        } else if include_bad && curve.coefficients_mod(p).is_some() {
            entries.push(ApEntry { p, a_p: ap_count_exhaustive(curve, p)?, class: PrimeClass::Bad });
        }
    }
    Ok(ApTable { label: curve.label().unwrap_or("").to_string(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces_from_worked_examples() {
        assert_eq!(ap_count(&WeierstrassCurve::short(8, 0).unwrap(), 5, false).unwrap(), -4);
        assert_eq!(ap_count(&WeierstrassCurve::short(-1, 0).unwrap(), 5, false).unwrap(), -2);
        let c27 = WeierstrassCurve::from_ints([0, 0, 1, 0, 0], None).unwrap();
        assert_eq!(ap_count(&c27, 2, false).unwrap(), 0);
    }

    #[test]
    fn bad_prime_needs_force() {
        let e = WeierstrassCurve::short(8, 0).unwrap();
        assert_eq!(ap_count(&e, 2, false), Err(Error::BadReduction(2)));
        assert!(ap_count(&e, 2, true).is_ok());
        assert_eq!(ap_count(&e, 4, false), Err(Error::NotPrime(4)));
    }

    #[test]
    fn legendre_sum_matches_enumeration() {
        let curves = [
            WeierstrassCurve::from_ints([0, 1, 0, -4, -4], None).unwrap(),
            WeierstrassCurve::from_ints([1, -1, 1, -3, 7], None).unwrap(),
            WeierstrassCurve::from_ints([0, 0, 1, 0, 0], None).unwrap(),
            WeierstrassCurve::from_ints([0, 1, 1, -2, 0], None).unwrap(),
        ];
        for e in &curves {
            for p in primes_up_to(150) {
                if e.is_good(p) {
                    assert_eq!(ap_count(e, p, false).unwrap(), ap_count_exhaustive(e, p).unwrap(), "p={p}");
                }
            }
        }
    }

    #[test]
    fn euler_criterion() {
        assert_eq!(legendre_symbol(2, 7), 1);
        assert_eq!(legendre_symbol(3, 7), -1);
        assert_eq!(legendre_symbol(14, 7), 0);
    }

    #[test]
    fn table_marks_bad_primes() {
        let e = WeierstrassCurve::short(-6, 0).unwrap();
        let t = ap_table(&e, 13, true).unwrap();
        assert_eq!(t.entries[0], ApEntry { p: 2, a_p: 0, class: PrimeClass::Bad });
        assert_eq!(t.entries[1], ApEntry { p: 3, a_p: 0, class: PrimeClass::Bad });
        assert!(t.hasse_ok());
        let t = ap_table(&e, 13, false).unwrap();
        assert_eq!(t.entries.iter().map(|e| e.p).collect::<Vec<_>>(), vec![5, 7, 11, 13]);
    }
}
