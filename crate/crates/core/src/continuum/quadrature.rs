//! Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on a finite interval.

use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Cx;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    #[serde(serialize_with = "ser_cx")]
    pub value: Cx,
    pub estimated_error: f64,
    pub evaluations: usize,
}

fn ser_cx<S: serde::Serializer>(z: &Cx, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&crate::report::cx12(*z), s)
}

/// One 15-point Kronrod panel with the embedded 7-point Gauss error estimate.
fn gk15<F: Fn(f64) -> Cx>(f: &F, a: f64, b: f64) -> (Cx, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        kronrod += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).norm())
}

struct Panel {
    a: f64,
    b: f64,
    value: Cx,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// Integrates `f` over `[a, b]`, bisecting the worst panel until the summed error
/// estimate is below `tol` or `max_evals` is exhausted. The final sum runs over
/// panels in left-to-right order.
pub fn integrate_gk<F: Fn(f64) -> Cx>(f: F, a: f64, b: f64, tol: f64, max_evals: usize) -> Result<QuadratureResult> {
    let (value, err) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, err });
    let mut evals = 15;
    let mut total_err = err;
    while total_err > tol || !total_err.is_finite() {
        if !total_err.is_finite() {
            return Err(Error::Quadrature("integrand produced a non-finite value".into()));
        }
        if evals + 30 > max_evals {
            return Err(Error::Quadrature(format!(
                "error estimate {total_err:.3e} above {tol:.1e} after {evals} evaluations"
            )));
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = gk15(&f, worst.a, mid);
        let (rv, re) = gk15(&f, mid, worst.b);
        evals += 30;
        heap.push(Panel { a: worst.a, b: mid, value: lv, err: le });
        heap.push(Panel { a: mid, b: worst.b, value: rv, err: re });
        total_err = heap.iter().map(|p| p.err).sum();
    }
    let mut panels = heap.into_vec();
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = panels.iter().fold(Cx::new(0.0, 0.0), |acc, p| acc + p.value);
    Ok(QuadratureResult { value, estimated_error: total_err, evaluations: evals })
}
