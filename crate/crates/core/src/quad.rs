//! Adaptive Gauss-Kronrod quadrature (7-15 pair) with panel bisection.
//!
//! The integrals this crate certifies are one-dimensional with smooth
//! integrands that carry sharp bumps at zero ordinates, so the driver
//! accepts hint points that force initial panel boundaries.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use rayon::prelude::*;
use std::collections::BinaryHeap;

/// Kronrod-15 abscissae (positive half).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];

/// Kronrod-15 weights.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Gauss-7 weights (matching XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// A certified quadrature value.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panel_count: usize,
    /// Integrand evaluations spent, including discarded refinement levels.
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // max-heap on error; ties broken by left endpoint for determinism
        self.error
            .total_cmp(&other.error)
            .then(other.a.total_cmp(&self.a))
    }
}

/// QUADPACK-style conservative rescaling of the raw `|K15 - G7|` estimate.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut res_abs = kronrod.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let raw = (kronrod - gauss) * half;
    Panel {
        a,
        b,
        value: kronrod * half,
        error: rescale_error(raw, res_abs * half.abs(), res_asc * half.abs()),
    }
}

const MAX_PANELS: usize = 400_000;

/// Integrates `f` over `[a, b]` to a relative tolerance
/// (`error <= tol * max(1, |value|)`). `hint_points` inside `(a, b)` become
/// initial panel boundaries; pass `&[]` to start from a single panel.
///
/// Panels are evaluated in parallel; the final reduction runs in ascending
/// panel order so results are deterministic for a fixed tolerance.
pub fn adaptive_integrate<F>(f: F, a: f64, b: f64, tol: f64, hint_points: &[f64]) -> Result<QuadResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(a < b) {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let mut cuts: Vec<f64> = Vec::with_capacity(hint_points.len() + 2);
    cuts.push(a);
    cuts.extend(hint_points.iter().copied().filter(|&x| x > a && x < b));
    cuts.push(b);
    cuts.sort_by(|x, y| x.total_cmp(y));
    cuts.dedup();

    let initial: Vec<Panel> = cuts
        .par_windows(2)
        .map(|w| gk15(&f, w[0], w[1]))
        .collect();
    let mut evaluations = 15 * initial.len();
    let mut heap: BinaryHeap<Panel> = initial.into();

    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        let budget = tol * value.abs().max(1.0);
        if error <= budget {
            break;
        }
        if heap.len() >= MAX_PANELS {
            return Err(Error::MaxSubdivision {
                partial: finish(&heap, evaluations),
            });
        }
        // split the worst panels, just enough to clear the overshoot under
        // the optimistic assumption that a split removes a panel's error
        let overshoot = error - 0.9 * budget;
        let mut removed = 0.0;
        let mut split = Vec::new();
        while removed < overshoot && split.len() < 512 {
            match heap.pop() {
                Some(p) if p.b - p.a > f64::EPSILON * p.b.abs().max(1.0) => {
                    removed += p.error;
                    split.push(p);
                }
                Some(p) => {
                    heap.push(p);
                    heap.extend(split);
                    return Err(Error::MaxSubdivision {
                        partial: finish(&heap, evaluations),
                    });
                }
                None => break,
            }
        }
        if split.is_empty() {
            break;
        }
        let children: Vec<Panel> = split
            .par_iter()
            .flat_map_iter(|p| {
                let m = 0.5 * (p.a + p.b);
                [gk15(&f, p.a, m), gk15(&f, m, p.b)]
            })
            .collect();
        evaluations += 15 * children.len();
        heap.extend(children);
    }
    Ok(finish(&heap, evaluations))
}

fn finish(heap: &BinaryHeap<Panel>, evaluations: usize) -> QuadResult {
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: KahanSum = panels.iter().map(|p| p.value).collect();
    let error: KahanSum = panels.iter().map(|p| p.error).collect();
    QuadResult {
        value: value.total(),
        error_estimate: error.total(),
        panel_count: panels.len(),
        evaluations,
    }
}
