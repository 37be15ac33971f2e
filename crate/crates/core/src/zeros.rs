//! Zero-ordinate tables and everything computed from them: counting
//! windows, kernel sums over zeros with rigorous truncation tails, log
//! sums, the short-interval window factor, and the truncated explicit
//! formula for `psi`.
//!
//! Ordinates are the positive imaginary parts `gamma` of nontrivial zeros
//! `1/2 + i gamma`; the mirrored zeros at `-gamma` are implied, never
//! stored. Truncation tails are dominated by covering `(gamma_max, inf)`
//! with unit intervals and bounding the zero count of each by the counting
//! main term plus the `0.28 log T` deviation.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::prime_sums::BoundedValue;
use crate::primes::PrimeSieve;
use std::f64::consts::PI;
use std::path::Path;

/// `zeta'(0)/zeta(0) = log 2pi`.
pub const LOG_DERIV_AT_ZERO: f64 = 1.8378770664093453;

/// Deviation coefficient of the zero-counting window.
pub const COUNT_DEVIATION: f64 = 0.28;

#[derive(Debug, Clone)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    gamma_max: f64,
    precision: u32,
}

impl ZeroTable {
    pub fn from_ordinates(ordinates: Vec<f64>, precision: u32) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::EmptyZeroTable);
        }
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[0] < w[1]) {
                return Err(Error::NonMonotone { line: i + 2 });
            }
        }
        if ordinates[0] <= 0.0 {
            return Err(Error::Parse {
                line: 1,
                message: format!("non-positive ordinate {}", ordinates[0]),
            });
        }
        if !(14.1347 < ordinates[0] && ordinates[0] < 14.1348) {
            return Err(Error::Parse {
                line: 1,
                message: format!(
                    "first ordinate {} not in (14.1347, 14.1348); not a zero table from height 0",
                    ordinates[0]
                ),
            });
        }
        let gamma_max = *ordinates.last().unwrap();
        Ok(ZeroTable {
            ordinates,
            gamma_max,
            precision,
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn gamma_max(&self) -> f64 {
        self.gamma_max
    }

    /// Decimal places carried by the source file.
    pub fn precision(&self) -> u32 {
        self.precision
    }
}

/// Parses a plain-text table: one ascending positive decimal per line.
pub fn load_zeros(path: &Path) -> Result<ZeroTable> {
    let text = std::fs::read_to_string(path)?;
    let mut ordinates = Vec::new();
    let mut precision = u32::MAX;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line.parse().map_err(|e| Error::Parse {
            line: i + 1,
            message: format!("{e}: {line:?}"),
        })?;
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("non-positive ordinate {line:?}"),
            });
        }
        if let Some(last) = ordinates.last() {
            if v <= *last {
                return Err(Error::NonMonotone { line: i + 1 });
            }
        }
        let decimals = line.split('.').nth(1).map_or(0, |d| d.len() as u32);
        precision = precision.min(decimals);
        ordinates.push(v);
    }
    if ordinates.is_empty() {
        return Err(Error::EmptyZeroTable);
    }
    ZeroTable::from_ordinates(ordinates, precision)
}

/// Exact count of ordinates `<= T`; requires `T <= gamma_max`.
pub fn zero_count(t: f64, table: &ZeroTable) -> Result<u64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("T = {t} must be positive")));
    }
    if t > table.gamma_max() {
        return Err(Error::OutOfRange {
            x: t,
            limit: table.gamma_max(),
        });
    }
    Ok(table.ordinates.partition_point(|&g| g <= t) as u64)
}

/// Counting window: `N(T)` lies in `main_term +/- (deviation + 1)`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ZeroCountBound {
    pub t: f64,
    pub main_term: f64,
    pub deviation: f64,
}

pub fn count_main_term(t: f64) -> f64 {
    t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 7.0 / 8.0
}

pub fn zero_count_window(t: f64) -> ZeroCountBound {
    ZeroCountBound {
        t,
        main_term: count_main_term(t),
        deviation: COUNT_DEVIATION * t.ln(),
    }
}

impl ZeroCountBound {
    pub fn contains(&self, count: u64) -> bool {
        let c = count as f64;
        c >= self.main_term - self.deviation - 1.0 && c <= self.main_term + self.deviation + 1.0
    }
}

/// Upper bound on the number of ordinates in `[u, u+1]`.
fn unit_count_bound(u: f64) -> f64 {
    count_main_term(u + 1.0) - count_main_term(u) + 2.0 * COUNT_DEVIATION * (u + 1.0).ln()
}

/// Unit intervals covered one by one before switching to the closed form.
const TAIL_UNIT_STEPS: usize = 1 << 21;

/// `sum_{gamma} 1/(a + (t - gamma)^2)` over all zeros (both signs of
/// `gamma`), as table head plus rigorous tail bound.
#[derive(Debug, Clone, serde::Serialize)]
pub struct KernelSum {
    pub value: BoundedValue,
    /// Right-hand side of the matching kernel inequality, when the
    /// hypotheses (`a = 6, |t| >= 4` or `a = 1/4, |t| >= 100`) hold.
    pub rhs: Option<f64>,
    pub holds: Option<bool>,
}

pub fn zero_sum_kernel(t: f64, a: f64, table: &ZeroTable) -> Result<KernelSum> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("a = {a} must be positive")));
    }
    let tt = t.abs();
    if tt > table.gamma_max() / 2.0 {
        return Err(Error::Domain(format!(
            "|t| = {tt} beyond gamma_max/2 = {}; truncation tail uncontrolled",
            table.gamma_max() / 2.0
        )));
    }
    let mut head = KahanSum::new();
    for &g in table.ordinates() {
        head.add(1.0 / (a + (t - g) * (t - g)));
        head.add(1.0 / (a + (t + g) * (t + g)));
    }
    // tail: unit intervals [u, u+1] past gamma_max; the kernel maximum over
    // the interval sits at the left end u on both mirror sides
    let g_max = table.gamma_max();
    let mut tail = KahanSum::new();
    for j in 0..TAIL_UNIT_STEPS {
        let u = g_max + j as f64;
        let cnt = unit_count_bound(u);
        tail.add(cnt * (1.0 / (a + (u - tt) * (u - tt)) + 1.0 / (a + (u + tt) * (u + tt))));
    }
    // beyond U: per-unit count <= 0.72 log(u+1), both kernel terms
    // <= 1/(u - tt)^2, and sum <= integral from X = U - 1
    let x0 = g_max + TAIL_UNIT_STEPS as f64 - 1.0;
    let w = x0 - tt;
    let beyond = 1.44 * ((w.ln() + 1.0) / w + (tt + 2.0) / (2.0 * w * w));
    let value = BoundedValue {
        partial: head.total(),
        tail_bound: tail.total() + beyond,
    };
    let rhs = if a == 6.0 && tt >= 4.0 {
        Some(tt.ln() / (2.0 * 6.0f64.sqrt()))
    } else if a == 0.25 && tt >= 100.0 {
        Some(9.0 * tt.ln())
    } else {
        None
    };
    if let Some(r) = rhs {
        if value.tail_bound > 0.1 * r {
            return Err(Error::TailDominates {
                tail: value.tail_bound,
                rhs: r,
            });
        }
    }
    let holds = rhs.map(|r| value.verified_upper() <= r);
    Ok(KernelSum { value, rhs, holds })
}

/// The two log sums over zeros, with the density-integral consistency data
/// for the first one.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ZeroLogSums {
    /// `sum_{0 < gamma <= T} log gamma`, exact over the table.
    pub sum_log: f64,
    /// `sum_{gamma > T} log gamma / gamma^2`: table head plus counting tail.
    pub sum_log_over_sq: BoundedValue,
    /// `(1/2pi) int_{2pi e}^T log t log(t/2pi) dt` plus the below-the-range
    /// ordinates; `sum_log` must agree within `deviation_budget`.
    pub density_expected: f64,
    pub deviation_budget: f64,
    pub within_budget: bool,
}

pub fn zero_log_sums(t: f64, table: &ZeroTable) -> Result<ZeroLogSums> {
    if !(t > 0.0) || t > table.gamma_max() {
        return Err(Error::OutOfRange {
            x: t,
            limit: table.gamma_max(),
        });
    }
    let mut sum_log = KahanSum::new();
    let mut head_sq = KahanSum::new();
    for &g in table.ordinates() {
        if g <= t {
            sum_log.add(g.ln());
        } else {
            head_sq.add(g.ln() / (g * g));
        }
    }
    // counting tail of log(gamma)/gamma^2 past gamma_max
    let g_max = table.gamma_max();
    let mut tail = KahanSum::new();
    for j in 0..TAIL_UNIT_STEPS {
        let u = g_max + j as f64;
        tail.add(unit_count_bound(u) * u.ln() / (u * u));
    }
    let x0 = g_max + TAIL_UNIT_STEPS as f64 - 1.0;
    // beyond: 0.72 int (log v)^2/v^2 + 1.44 int log v / v^3
    let l = x0.ln();
    let beyond = 0.72 * (l * l + 2.0 * l + 2.0) / x0 + 1.44 * (2.0 * l + 1.0) / (4.0 * x0 * x0);
    // density integral in closed form:
    // int log^2 t dt = t (log^2 t - 2 log t + 2), int log t dt = t (log t - 1)
    let f = |v: f64| v * (v.ln() * v.ln() - 2.0 * v.ln() + 2.0);
    let g = |v: f64| v * (v.ln() - 1.0);
    let a = 2.0 * PI * std::f64::consts::E;
    let mut density = if t > a {
        (f(t) - f(a) - (2.0 * PI).ln() * (g(t) - g(a))) / (2.0 * PI)
    } else {
        0.0
    };
    for &gamma in table.ordinates() {
        if gamma <= a.min(t) {
            density += gamma.ln();
        }
    }
    // partial-summation budget: boundary terms plus the integrated
    // deviation, 0.28 log T each, against phi = log
    let budget = 2.0 * COUNT_DEVIATION * t.ln() * t.ln() + 2.0;
    let sum_log = sum_log.total();
    Ok(ZeroLogSums {
        sum_log,
        sum_log_over_sq: BoundedValue {
            partial: head_sq.total(),
            tail_bound: tail.total() + beyond,
        },
        density_expected: density,
        deviation_budget: budget,
        within_budget: (sum_log - density).abs() <= budget,
    })
}

/// `e^w - 1` without cancellation for small `w`.
fn complex_expm1(w: crate::Complex) -> crate::Complex {
    let ea = w.re.exp();
    // e^a cos b - 1 = expm1(a) - e^a 2 sin^2(b/2)
    let re = w.re.exp_m1() - ea * 2.0 * (0.5 * w.im).sin().powi(2);
    crate::Complex::new(re, ea * w.im.sin())
}

/// `|((1+delta)^(1/2+it) - 1) / (1/2+it)|`, the per-zero window weight.
pub fn window_factor(delta: f64, t: f64) -> Result<f64> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::Domain(format!("delta = {delta} outside (0, 1]")));
    }
    let s = crate::Complex::new(0.5, t);
    let z = complex_expm1(s * delta.ln_1p());
    Ok((z / s).norm())
}

/// The bound `min(delta, ell/|t|)` with `ell = sqrt(1+delta) + 1`.
pub fn window_factor_bound(delta: f64, t: f64) -> f64 {
    let ell = (1.0 + delta).sqrt() + 1.0;
    if t == 0.0 {
        delta
    } else {
        delta.min(ell / t.abs())
    }
}

/// Truncated explicit formula for `psi(y)` against the sieve value.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ExplicitPsi {
    pub y: f64,
    pub approx: f64,
    pub exact: f64,
    pub residual: f64,
    pub zeros_used: usize,
}

/// `psi(y) ~ y - sum_{|gamma| <= T} y^rho / rho - log 2pi
///  - (1/2) log(1 - y^-2)`, summed over the first `max_zeros` table entries
/// (all of them when `None`). Integer `y` is perturbed by 1e-6.
pub fn explicit_formula_psi(
    y: f64,
    table: &ZeroTable,
    sieve: &PrimeSieve,
    max_zeros: Option<usize>,
) -> Result<ExplicitPsi> {
    if y < 2.0 {
        return Err(Error::Domain(format!("y = {y} below 2")));
    }
    if y > sieve.limit() as f64 {
        return Err(Error::OutOfRange {
            x: y,
            limit: sieve.limit() as f64,
        });
    }
    let y_used = if y.fract() == 0.0 { y + 1e-6 } else { y };
    let count = max_zeros
        .unwrap_or(table.len())
        .min(table.len());
    let ln_y = y_used.ln();
    let sqrt_y = y_used.sqrt();
    let mut zero_sum = KahanSum::new();
    for &g in &table.ordinates()[..count] {
        // y^rho/rho + conjugate = 2 sqrt(y) (cos(g L)/2 + g sin(g L)) / (1/4 + g^2)
        let (s, c) = (g * ln_y).sin_cos();
        zero_sum.add(2.0 * sqrt_y * (0.5 * c + g * s) / (0.25 + g * g));
    }
    let approx =
        y_used - zero_sum.total() - LOG_DERIV_AT_ZERO - 0.5 * (1.0 - y_used.powi(-2)).ln();
    let exact = sieve.psi(y_used)?;
    Ok(ExplicitPsi {
        y: y_used,
        approx,
        exact,
        residual: approx - exact,
        zeros_used: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn tiny_table() -> ZeroTable {
        // first ten ordinates, 9 decimals
        ZeroTable::from_ordinates(
            vec![
                14.134725142,
                21.022039639,
                25.010857580,
                30.424876126,
                32.935061588,
                37.586178159,
                40.918719012,
                43.327073281,
                48.005150881,
                49.773832478,
            ],
            9,
        )
        .unwrap()
    }

    #[test]
    fn parses_and_validates() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "14.13472514\n21.02203964\n25.01085758").unwrap();
        let table = load_zeros(f.path()).unwrap();
        assert_eq!(table.len(), 3);
        assert_eq!(table.precision(), 8);
        assert!((table.gamma_max() - 25.01085758).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_monotone() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "14.1347252\n13.99").unwrap();
        assert!(matches!(
            load_zeros(f.path()),
            Err(Error::NonMonotone { line: 2 })
        ));
    }

    #[test]
    fn rejects_empty() {
        let f = tempfile::NamedTempFile::new().unwrap();
        assert!(matches!(load_zeros(f.path()), Err(Error::EmptyZeroTable)));
    }

    #[test]
    fn rejects_garbage() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "14.1347252\nnot-a-number").unwrap();
        assert!(matches!(load_zeros(f.path()), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn count_below_first_is_zero() {
        let table = tiny_table();
        assert_eq!(zero_count(14.0, &table).unwrap(), 0);
        assert_eq!(zero_count(21.1, &table).unwrap(), 2);
        assert!(zero_count(1e6, &table).is_err());
    }

    #[test]
    fn counting_window_at_low_heights() {
        let table = tiny_table();
        for t in [15.0, 25.5, 40.0, 49.0] {
            let w = zero_count_window(t);
            let n = zero_count(t, &table).unwrap();
            assert!(w.contains(n), "T = {t}: N = {n}, window = {w:?}");
        }
    }

    #[test]
    fn kernel_head_symmetric_in_t() {
        // a = 5 carries no lemma hypothesis, so the tiny table's dominant
        // tail does not reject the call
        let table = tiny_table();
        let a = zero_sum_kernel(4.0, 5.0, &table).unwrap();
        let b = zero_sum_kernel(-4.0, 5.0, &table).unwrap();
        assert_eq!(a.value.partial, b.value.partial);
        assert!(a.rhs.is_none());
    }

    #[test]
    fn kernel_no_assertion_out_of_hypothesis() {
        let table = tiny_table();
        let k = zero_sum_kernel(0.0, 6.0, &table).unwrap();
        assert!(k.rhs.is_none() && k.holds.is_none());
        assert!(k.value.partial > 0.0);
    }

    #[test]
    fn kernel_rejects_t_beyond_half_range() {
        let table = tiny_table();
        assert!(zero_sum_kernel(30.0, 6.0, &table).is_err());
    }

    #[test]
    fn window_factor_closed_form_at_zero() {
        let v = window_factor(0.5, 0.0).unwrap();
        let expect = 2.0 * (1.5f64.sqrt() - 1.0);
        assert!((v - expect).abs() < 1e-14);
        assert!(v <= window_factor_bound(0.5, 0.0));
    }

    #[test]
    fn window_factor_large_t() {
        let v = window_factor(0.5, 1e6).unwrap();
        assert!(v <= (1.5f64.sqrt() + 1.0) / 1e6);
    }

    #[test]
    fn window_factor_vanishes_with_delta() {
        for t in [0.0, 3.0, 1e4] {
            let v = window_factor(1e-12, t).unwrap();
            assert!(v <= 1e-12 + 1e-24, "t = {t}");
        }
    }

    #[test]
    fn zero_log_sums_empty_below_first_zero() {
        let table = tiny_table();
        let z = zero_log_sums(14.0, &table).unwrap();
        assert_eq!(z.sum_log, 0.0);
        assert!(z.sum_log_over_sq.partial > 0.0);
    }
}
