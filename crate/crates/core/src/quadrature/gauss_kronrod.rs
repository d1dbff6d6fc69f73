//! Embedded 7-point Gauss / 15-point Kronrod rule with the QUADPACK error
//! heuristic, and the globally adaptive bisection driver built on it.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub(crate) const MAX_PANELS: usize = 2000;
pub(crate) const MAX_DEPTH: u32 = 60;

#[derive(Debug, Clone, Copy)]
pub(crate) struct PanelEstimate {
    pub value: f64,
    pub err: f64,
}

fn checked<F>(f: &F, t: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let v = f(t)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: t, value: v })
    }
}

/// One G7/K15 evaluation on `[a, b]`.
pub(crate) fn gk15<F>(f: &F, a: f64, b: f64) -> Result<PanelEstimate>
where
    F: Fn(f64) -> Result<f64>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = checked(f, centre)?;
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = checked(f, centre - x)?;
        let f2 = checked(f, centre + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let width = half.abs();
    res_abs *= width;
    res_asc *= width;
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(PanelEstimate {
        value: res_k * half,
        err,
    })
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    est: PanelEstimate,
    depth: u32,
    retired: bool,
}

#[derive(Debug, PartialEq)]
struct Key {
    err: f64,
    id: usize,
}

impl Eq for Key {}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.id.cmp(&self.id))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct AdaptiveOutcome {
    pub value: f64,
    pub err: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Pairwise summation in a fixed order.
pub(crate) fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let (l, r) = values.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

/// Globally adaptive bisection of the panel with the largest error estimate,
/// starting from `initial` equal panels on `[a, b]`.
pub(crate) fn adaptive<F>(f: &F, a: f64, b: f64, initial: usize, tol: f64) -> Result<AdaptiveOutcome>
where
    F: Fn(f64) -> Result<f64>,
{
    let initial = initial.max(1);
    let mut panels: Vec<Panel> = Vec::with_capacity(2 * MAX_PANELS);
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    let mut total_err = 0.0;
    let step = (b - a) / initial as f64;
    for i in 0..initial {
        let lo = a + step * i as f64;
        let hi = if i + 1 == initial { b } else { a + step * (i + 1) as f64 };
        let est = gk15(f, lo, hi)?;
        evaluations += 15;
        total_err += est.err;
        heap.push(Key {
            err: est.err,
            id: panels.len(),
        });
        panels.push(Panel {
            a: lo,
            b: hi,
            est,
            depth: 0,
            retired: false,
        });
    }
    let mut leaves = initial;

    while total_err > tol {
        if leaves >= MAX_PANELS {
            break;
        }
        let Some(Key { id, .. }) = heap.pop() else {
            break;
        };
        let p = panels[id];
        let mid = 0.5 * (p.a + p.b);
        if p.depth >= MAX_DEPTH || !(mid > p.a && mid < p.b) {
            // kept as a leaf but never split again
            continue;
        }
        let left = gk15(f, p.a, mid)?;
        let right = gk15(f, mid, p.b)?;
        evaluations += 30;
        panels[id].retired = true;
        total_err += left.err + right.err - p.est.err;
        for (lo, hi, est) in [(p.a, mid, left), (mid, p.b, right)] {
            heap.push(Key {
                err: est.err,
                id: panels.len(),
            });
            panels.push(Panel {
                a: lo,
                b: hi,
                est,
                depth: p.depth + 1,
                retired: false,
            });
        }
        leaves += 1;
        if total_err <= tol {
            // guard against drift in the running sum
            total_err = panels.iter().filter(|p| !p.retired).map(|p| p.est.err).sum();
        }
    }

    let mut live: Vec<&Panel> = panels.iter().filter(|p| !p.retired).collect();
    live.sort_by(|x, y| x.a.total_cmp(&y.a));
    let values: Vec<f64> = live.iter().map(|p| p.est.value).collect();
    let errs: Vec<f64> = live.iter().map(|p| p.est.err).collect();
    let err = pairwise_sum(&errs);
    Ok(AdaptiveOutcome {
        value: pairwise_sum(&values),
        err,
        evaluations,
        converged: err <= tol,
    })
}
