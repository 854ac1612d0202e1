use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::exactmath::{poly_divrem, rat, Poly, Rational};

/// The 8x8 pairing on `(e1/u, e2/u, e1, e2, e1 u, e2 u, e1 u^2, e2 u^2)` and its
/// nondegenerate 4x4 block on the `u^-1` and `u` modes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonomialGram {
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Vec<Vec<Rational>>,
    pub rank: usize,
    #[serde(serialize_with = "ser_matrix")]
    pub reduced: Vec<Vec<Rational>>,
    #[serde(serialize_with = "ser_vec")]
    pub eigenvalues: Vec<Rational>,
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    serde::Serialize::serialize(&v, s)
}

fn ser_vec<S: serde::Serializer>(m: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<String> = m.iter().map(|x| x.to_string()).collect();
    serde::Serialize::serialize(&v, s)
}

/// Only the `u^-1 <-> u` pairings are nonzero: `<e_i u^n, e_i u^m> = 2 eps_i (-1)^n`
/// for `{n, m} = {-1, 1}`. The constant and `u^2` modes span the radical, so the rank
/// is 4 and the reduced block is `2((0, -E), (-E, 0))` with `E = diag(eps1, eps2)`.
pub fn monomial_gram8(eps1: i64, eps2: i64) -> MonomialGram {
    let eps = [eps1, eps2];
    let mut m = vec![vec![Rational::zero(); 8]; 8];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            let (n, i) = (r as i64 / 2 - 1, r % 2);
            let (k, j) = (c as i64 / 2 - 1, c % 2);
            if i == j && n + k == 0 && n != 0 {
                let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
                *cell = rat(2 * eps[i] * sign, 1);
            }
        }
    }
    let keep = [0usize, 1, 4, 5];
    let reduced: Vec<Vec<Rational>> = keep.iter().map(|&r| keep.iter().map(|&c| m[r][c].clone()).collect()).collect();
    let rank = rank_of(&m);
    let eigenvalues = rational_eigenvalues(&reduced);
    MonomialGram { matrix: m, rank, reduced, eigenvalues }
}

/// Exact rank by Gaussian elimination.
pub fn rank_of(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let v = &f * &a[rank][k];
                    a[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `det(x I - A)` by Faddeev-LeVerrier.
pub fn char_poly(a: &[Vec<Rational>]) -> Poly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul(a, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / rat(k as i64, 1);
    }
    Poly::new(coeffs)
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Rational eigenvalues with multiplicity (ascending); irrational ones are omitted.
pub fn rational_eigenvalues(a: &[Vec<Rational>]) -> Vec<Rational> {
    let mut p = char_poly(a);
    let mut out = Vec::new();
    loop {
        let Some(deg) = p.degree() else { break };
        if deg == 0 {
            break;
        }
        let Some(root) = find_rational_root(&p) else { break };
        let (q, _) = poly_divrem(&p, &Poly::new(vec![-root.clone(), Rational::one()])).expect("nonzero divisor");
        p = q;
        out.push(root);
    }
    out.sort();
    out
}

fn find_rational_root(p: &Poly) -> Option<Rational> {
    if p.coeff(0).is_zero() {
        return Some(Rational::zero());
    }
    let lcm = p.coeffs().iter().fold(num_bigint::BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<i64> = p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer().to_i64()).collect::<Option<_>>()?;
    let a0 = ints[0].abs();
    let an = ints.last()?.abs();
    if a0 > 1_000_000 || an > 1_000_000 {
        return None;
    }
    let divisors = |n: i64| (1..=n).filter(move |d| n % d == 0);
    for num in divisors(a0) {
        for den in divisors(an) {
            for s in [1, -1] {
                let cand = rat(s * num, den);
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}
