use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Pencil2;
use crate::error::{Error, Result};
use crate::exactmath::{residue_at_zero, LambdaPoly, LaurentBiPoly, Rational};

/// 2x2 matrix of polynomials in `lambda`, scaled by the normalisation `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaGram {
    pub entries: [[LambdaPoly; 2]; 2],
    pub c: Rational,
}

impl EtaGram {
    /// Constant diagonal Gram `diag(g1, g2)`, mainly for hand-built cases.
    pub fn diag(g1: Rational, g2: Rational) -> Self {
        let e = |g: Rational| -> LambdaPoly {
            if g.is_zero() {
                BTreeMap::new()
            } else {
                BTreeMap::from([(0, g)])
            }
        };
        EtaGram { entries: [[e(g1), BTreeMap::new()], [BTreeMap::new(), e(g2)]], c: Rational::from_integer(1.into()) }
    }

    pub fn entry(&self, i: usize, j: usize) -> &LambdaPoly {
        &self.entries[i][j]
    }

    /// Entry at `lambda = 0`.
    pub fn at_zero(&self, i: usize, j: usize) -> Rational {
        self.entries[i][j].get(&0).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries[0][1].is_empty() && self.entries[1][0].is_empty()
    }

    pub fn is_lambda_independent(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.keys().all(|&k| k == 0))
    }

    pub fn max_lambda_degree(&self) -> u32 {
        self.entries.iter().flatten().filter_map(|p| p.keys().max().copied()).max().unwrap_or(0)
    }

    /// Entries as text, e.g. `[["1", "0"], ["0", "-1"]]`, lambda written `l`.
    pub fn to_strings(&self) -> [[String; 2]; 2] {
        let f = |p: &LambdaPoly| -> String {
            if p.is_empty() {
                return "0".into();
            }
            let parts: Vec<String> = p
                .iter()
                .rev()
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("({c})*l"),
                    _ => format!("({c})*l^{k}"),
                })
                .collect();
            parts.join(" + ")
        };
        [[f(&self.entries[0][0]), f(&self.entries[0][1])], [f(&self.entries[1][0]), f(&self.entries[1][1])]]
    }
}

impl Serialize for EtaGram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EtaGram", 2)?;
        st.serialize_field("c", &self.c.to_string())?;
        st.serialize_field("entries", &self.to_strings())?;
        st.end()
    }
}

/// `u^0` coefficient family of `f`, i.e. the residue of `f/u` at `u = 0`.
fn res0(f: &LaurentBiPoly) -> LambdaPoly {
    residue_at_zero(&f.shift_u(-1))
}

fn scale_poly(p: &LambdaPoly, c: &Rational) -> LambdaPoly {
    p.iter().map(|(k, v)| (*k, v * c)).filter(|(_, v)| !v.is_zero()).collect()
}

/// `G_ij = c * Res_{u=0} phi_i(-u)^T J phi_j(u) / u` on the adjugate columns
/// `phi_1 = (A22, -A21)`, `phi_2 = (-A12, A11)`.
///
/// The off-diagonal pencil entries are `+-b l/u`, so `b` enters the diagonal Gram
/// entries only through `b^2` and the off-diagonal ones linearly. The latter are
/// computed at `b = 1` and rescaled, which needs a rational `b` only when they are
/// nonzero.
pub fn eta_gram(p: &Pencil2, c: &Rational) -> Result<EtaGram> {
    let [a11, u12, u21, a22] = p.unit_entries();
    let neg = |f: &LaurentBiPoly| f.negate_u();
    let g11 = &(&neg(&a22) * &a22) - &(&neg(&u21) * &u21).scale(&p.b_sq);
    let g22 = &(&neg(&u12) * &u12).scale(&p.b_sq) - &(&neg(&a11) * &a11);
    let g12_unit = &(&neg(&u21) * &a11) - &(&neg(&a22) * &u12);
    let g21_unit = &(&neg(&a11) * &u21) - &(&neg(&u12) * &a22);
    let off = |unit: &LaurentBiPoly| -> Result<LambdaPoly> {
        let r = res0(unit);
        if r.is_empty() {
            return Ok(r);
        }
        let b = p.b.as_ref().ok_or_else(|| Error::IrrationalCoupling(p.b_sq.to_string()))?;
        Ok(scale_poly(&r, &(b * c)))
    };
    Ok(EtaGram {
        entries: [
            [scale_poly(&res0(&g11), c), off(&g12_unit)?],
            [off(&g21_unit)?, scale_poly(&res0(&g22), c)],
        ],
        c: c.clone(),
    })
}

/// True iff every odd power of `lambda` has a zero coefficient in every entry.
pub fn lambda_evenness_check(g: &EtaGram) -> bool {
    g.entries.iter().flatten().all(|p| p.iter().all(|(k, v)| k % 2 == 0 || v.is_zero()))
}

/// Number of negative diagonal entries of `G(0)`.
pub fn pontryagin_index(g: &EtaGram) -> Result<usize> {
    let d = [g.at_zero(0, 0), g.at_zero(1, 1)];
    if d.iter().any(|x| x.is_zero()) {
        return Err(Error::DegenerateGram);
    }
    Ok(d.iter().filter(|x| x.is_negative()).count())
}
