//! Segmented odd-only sieve with block-granular `psi`/`theta` checkpoint
//! tables, Goldbach partition probes, and the interval scan behind the
//! `(x, x + C log^2 x]` theorem check.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Odd numbers per segment; one checkpoint per segment.
const SEGMENT_ODDS: usize = 1 << 20;
/// Integers spanned by one segment.
const SPAN: u64 = 2 * SEGMENT_ODDS as u64;

const DEFAULT_BUDGET_BYTES: u64 = 1 << 30;
pub const MAX_LIMIT: u64 = 10_000_000_000;

/// Immutable prime data up to `limit`: primality bit-set, cumulative
/// `theta`/`psi`/count checkpoints at segment granularity, and the sorted
/// list of proper prime powers `p^k, k >= 2`.
pub struct PrimeSieve {
    limit: u64,
    bits: Vec<u64>,
    theta_ckpt: Vec<f64>,
    psi_ckpt: Vec<f64>,
    count_ckpt: Vec<u64>,
    powers: Vec<(u64, f64)>,
    power_prefix: Vec<f64>,
    prime_count: u64,
}

#[inline]
fn bit_is_set(bits: &[u64], idx: usize) -> bool {
    bits[idx >> 6] & (1u64 << (idx & 63)) != 0
}

#[inline]
fn clear_bit(bits: &mut [u64], idx: usize) {
    bits[idx >> 6] &= !(1u64 << (idx & 63));
}

/// Plain sieve of Eratosthenes for the base primes up to `n`.
fn simple_sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2usize;
    while i * i <= n {
        if is_prime[i] {
            let mut j = i * i;
            while j <= n {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| is_prime[k]).map(|k| k as u64).collect()
}

pub fn build_sieve(limit: u64) -> Result<PrimeSieve> {
    build_sieve_with_budget(limit, DEFAULT_BUDGET_BYTES)
}

pub fn build_sieve_with_budget(limit: u64, budget_bytes: u64) -> Result<PrimeSieve> {
    if !(2..=MAX_LIMIT).contains(&limit) {
        return Err(Error::Domain(format!(
            "sieve limit {limit} outside [2, {MAX_LIMIT}]"
        )));
    }
    let n_odds = limit.div_ceil(2) as usize; // odd numbers 1, 3, .., <= limit
    let bytes_needed = (n_odds as u64 / 8) + 64;
    if bytes_needed > budget_bytes {
        return Err(Error::Capacity {
            limit,
            budget: budget_bytes,
        });
    }
    let words = n_odds.div_ceil(64);
    let mut bits = vec![u64::MAX; words];
    clear_bit(&mut bits, 0); // n = 1
    // mask stray bits past the last odd <= limit
    let last = n_odds - 1;
    if (last & 63) != 63 {
        bits[words - 1] &= (1u64 << ((last & 63) + 1)) - 1;
    }

    let sqrt = (limit as f64).sqrt() as u64 + 1;
    let base = simple_sieve(sqrt.min(limit));

    // proper prime powers p^k <= limit (k >= 2), ascending
    let mut powers: Vec<(u64, f64)> = Vec::new();
    for &p in &base {
        let mut q = p.checked_mul(p);
        while let Some(v) = q {
            if v > limit {
                break;
            }
            powers.push((v, (p as f64).ln()));
            q = v.checked_mul(p);
        }
    }
    powers.sort_unstable_by_key(|&(q, _)| q);
    let mut power_prefix = Vec::with_capacity(powers.len() + 1);
    let mut acc = KahanSum::new();
    power_prefix.push(0.0);
    for &(_, lg) in &powers {
        acc.add(lg);
        power_prefix.push(acc.total());
    }

    // segmented composite marking over odd numbers
    let odd_base: Vec<u64> = base.iter().copied().filter(|&p| p > 2).collect();
    let mut seg_lo = 0usize; // odd-index of segment start
    while seg_lo < n_odds {
        let seg_hi = (seg_lo + SEGMENT_ODDS).min(n_odds); // exclusive
        let lo_num = 2 * seg_lo as u64 + 1;
        let hi_num = 2 * seg_hi as u64 - 1;
        for &p in &odd_base {
            if p * p > hi_num {
                break;
            }
            // first odd multiple of p inside [lo_num, hi_num], at least p^2
            let mut start = p * p;
            if start < lo_num {
                let mut m = lo_num.div_ceil(p) * p;
    x-nomatch
                start = m;
            }
            let mut idx = ((start - 1) / 2) as usize;
            while idx < seg_hi {
                clear_bit(&mut bits, idx);
                idx += p as usize;
            }
        }
        seg_lo = seg_hi;
    }

    // checkpoint accumulation: theta/psi/count at segment boundaries
    let n_segments = (limit / SPAN + 1) as usize;
    let mut theta_ckpt = Vec::with_capacity(n_segments + 1);
    let mut psi_ckpt = Vec::with_capacity(n_segments + 1);
    let mut count_ckpt = Vec::with_capacity(n_segments + 1);
    let mut theta_acc = KahanSum::new();
    let mut pow_cursor = 0usize;
    let mut count = 0u64;
    theta_ckpt.push(0.0);
    psi_ckpt.push(0.0);
    count_ckpt.push(0);
    for seg in 0..n_segments {
        let lo = seg as u64 * SPAN;
        let hi = ((seg as u64 + 1) * SPAN).min(limit + 1); // exclusive
        if lo == 0 && limit >= 2 {
            theta_acc.add(std::f64::consts::LN_2);
            count += 1;
        }
        let mut idx = (lo / 2) as usize; // odd index of first odd >= lo (lo even)
        let end = (hi / 2 + (hi % 2)) as usize; // odds < hi
        while idx < end.min(n_odds) {
            if bit_is_set(&bits, idx) {
                let n = 2 * idx as u64 + 1;
                theta_acc.add((n as f64).ln());
                count += 1;
            }
            idx += 1;
        }
        while pow_cursor < powers.len() && powers[pow_cursor].0 < hi {
            pow_cursor += 1;
        }
        theta_ckpt.push(theta_acc.total());
        psi_ckpt.push(theta_acc.total() + power_prefix[pow_cursor]);
        count_ckpt.push(count);
    }

    Ok(PrimeSieve {
        limit,
        bits,
        theta_ckpt,
        psi_ckpt,
        count_ckpt,
        powers,
        power_prefix,
        prime_count: count,
    })
}

impl PrimeSieve {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `pi(limit)`.
    pub fn prime_count(&self) -> u64 {
        self.prime_count
    }

    pub fn is_prime(&self, n: u64) -> bool {
        if n > self.limit || n < 2 {
            return false;
        }
        if n == 2 {
            return true;
        }
        if n.is_multiple_of(2) {
            return false;
        }
        bit_is_set(&self.bits, ((n - 1) / 2) as usize)
    }

    fn check_range(&self, x: f64) -> Result<u64> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::Domain(format!("bad argument x = {x}")));
        }
        if x > self.limit as f64 {
            return Err(Error::OutOfRange {
                x,
                limit: self.limit as f64,
            });
        }
        Ok(x.floor() as u64)
    }

    /// `theta(x) = sum_{p <= x} log p`, exact over the sieve.
    pub fn theta(&self, x: f64) -> Result<f64> {
        let n = self.check_range(x)?;
        if n < 2 {
            return Ok(0.0);
        }
        let seg = n / SPAN;
        let mut acc = KahanSum::new();
        acc.add(self.theta_ckpt[seg as usize]);
        if seg == 0 && n >= 2 {
            acc.add(std::f64::consts::LN_2);
        }
        let mut idx = (seg * SPAN / 2) as usize;
        let end = ((n - 1) / 2) as usize;
        while idx <= end {
            if bit_is_set(&self.bits, idx) {
                acc.add(((2 * idx as u64 + 1) as f64).ln());
            }
            idx += 1;
        }
        Ok(acc.total())
    }

    /// `psi(x) = sum_{p^k <= x} log p`, exact over the sieve.
    pub fn psi(&self, x: f64) -> Result<f64> {
        let n = self.check_range(x)?;
        if n < 2 {
            return Ok(0.0);
        }
        let seg = n / SPAN;
        let mut acc = KahanSum::new();
        acc.add(self.psi_ckpt[seg as usize]);
        if seg == 0 && n >= 2 {
            acc.add(std::f64::consts::LN_2);
        }
        let mut idx = (seg * SPAN / 2) as usize;
        let end = ((n - 1) / 2) as usize;
        while idx <= end {
            if bit_is_set(&self.bits, idx) {
                acc.add(((2 * idx as u64 + 1) as f64).ln());
            }
            idx += 1;
        }
        // proper powers inside (seg*SPAN - 1, n]
        let lo = seg * SPAN;
        let a = self.powers.partition_point(|&(q, _)| q < lo);
        let b = self.powers.partition_point(|&(q, _)| q <= n);
        acc.add(self.power_prefix[b] - self.power_prefix[a]);
        Ok(acc.total())
    }

    /// `pi(x)`.
    pub fn count_primes(&self, x: f64) -> Result<u64> {
        let n = self.check_range(x)?;
        if n < 2 {
            return Ok(0);
        }
        let seg = n / SPAN;
        let mut count = self.count_ckpt[seg as usize];
        if seg == 0 && n >= 2 {
            count += 1;
        }
        let mut idx = (seg * SPAN / 2) as usize;
        let end = ((n - 1) / 2) as usize;
        while idx <= end {
            if bit_is_set(&self.bits, idx) {
                count += 1;
            }
            idx += 1;
        }
        Ok(count)
    }

    /// The `idx`-th prime (1-based), if it lies within the sieve.
    pub fn nth_prime(&self, idx: u64) -> Result<u64> {
        if idx == 0 || idx > self.prime_count {
            return Err(Error::OutOfRange {
                x: idx as f64,
                limit: self.prime_count as f64,
            });
        }
        if idx == 1 {
            return Ok(2);
        }
        let seg = self.count_ckpt.partition_point(|&c| c < idx) - 1;
        let mut count = self.count_ckpt[seg];
        if seg == 0 {
            count += 1; // prime 2
        }
        let mut i = (seg as u64 * SPAN / 2) as usize;
        loop {
            if bit_is_set(&self.bits, i) {
                count += 1;
                if count == idx {
                    return Ok(2 * i as u64 + 1);
                }
            }
            i += 1;
        }
    }

    /// Ascending primes, starting at 2.
    pub fn primes(&self) -> PrimeIter<'_> {
        PrimeIter {
            sieve: self,
            next_idx: 0,
            emitted_two: false,
        }
    }

    /// Ascending `(n, Lambda(n))` over prime powers (`Lambda(n) = log p`).
    pub fn lambda_events(&self) -> LambdaIter<'_> {
        LambdaIter {
            primes: self.primes(),
            powers: &self.powers,
            pending_prime: None,
            power_cursor: 0,
        }
    }

    /// Minimal odd prime `p` with `n - p` prime, for even `n >= 6`.
    pub fn goldbach_partner(&self, n: u64) -> Option<u64> {
        if n < 6 || !n.is_multiple_of(2) || n > self.limit {
            return None;
        }
        let mut idx = 1usize; // odd number 3
        loop {
            let p = 2 * idx as u64 + 1;
            if p > n - p {
                return None;
            }
            if bit_is_set(&self.bits, idx) && self.is_prime(n - p) {
                return Some(p);
            }
            idx += 1;
        }
    }

    /// Whether `n` is a Goldbach number (a sum of two odd primes).
    pub fn is_goldbach(&self, n: u64) -> bool {
        self.goldbach_partner(n).is_some()
    }

    pub(crate) fn bits(&self) -> &[u64] {
        &self.bits
    }

    pub(crate) fn from_bits(limit: u64, bits: Vec<u64>, expect_count: u64) -> Result<Self> {
        // rebuild checkpoints and powers from a cached bit-set
        let n_odds = limit.div_ceil(2) as usize;
        if bits.len() != n_odds.div_ceil(64) {
            return Err(Error::CacheCorrupt(format!(
                "bit-set length {} does not match limit {limit}",
                bits.len()
            )));
        }
        let sqrt = (limit as f64).sqrt() as u64 + 1;
        let base = simple_sieve(sqrt.min(limit));
        let mut powers: Vec<(u64, f64)> = Vec::new();
        for &p in &base {
            let mut q = p.checked_mul(p);
            while let Some(v) = q {
                if v > limit {
                    break;
                }
                powers.push((v, (p as f64).ln()));
                q = v.checked_mul(p);
            }
        }
        powers.sort_unstable_by_key(|&(q, _)| q);
        let mut power_prefix = Vec::with_capacity(powers.len() + 1);
        let mut acc = KahanSum::new();
        power_prefix.push(0.0);
        for &(_, lg) in &powers {
            acc.add(lg);
            power_prefix.push(acc.total());
        }
        let n_segments = (limit / SPAN + 1) as usize;
        let mut theta_ckpt = vec![0.0];
        let mut psi_ckpt = vec![0.0];
        let mut count_ckpt = vec![0u64];
        let mut theta_acc = KahanSum::new();
        let mut pow_cursor = 0usize;
        let mut count = 0u64;
        for seg in 0..n_segments {
            let lo = seg as u64 * SPAN;
            let hi = ((seg as u64 + 1) * SPAN).min(limit + 1);
            if lo == 0 && limit >= 2 {
                theta_acc.add(std::f64::consts::LN_2);
                count += 1;
            }
            let mut idx = (lo / 2) as usize;
            let end = ((hi / 2 + (hi % 2)) as usize).min(n_odds);
            while idx < end {
                if bit_is_set(&bits, idx) {
                    theta_acc.add(((2 * idx as u64 + 1) as f64).ln());
                    count += 1;
                }
                idx += 1;
            }
            while pow_cursor < powers.len() && powers[pow_cursor].0 < hi {
                pow_cursor += 1;
            }
            theta_ckpt.push(theta_acc.total());
            psi_ckpt.push(theta_acc.total() + power_prefix[pow_cursor]);
            count_ckpt.push(count);
        }
        if count != expect_count {
            return Err(Error::CacheCorrupt(format!(
                "stored pi(limit) = {expect_count}, recount gives {count}"
            )));
        }
        Ok(PrimeSieve {
            limit,
            bits,
            theta_ckpt,
            psi_ckpt,
            count_ckpt,
            powers,
            power_prefix,
            prime_count: count,
        })
    }
}

pub struct PrimeIter<'a> {
    sieve: &'a PrimeSieve,
    next_idx: usize,
    emitted_two: bool,
}

impl Iterator for PrimeIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.emitted_two {
            self.emitted_two = true;
            if self.sieve.limit >= 2 {
                return Some(2);
            }
            return None;
        }
        let bits = &self.sieve.bits;
        let n_words = bits.len();
        let mut idx = self.next_idx;
        while idx >> 6 < n_words {
            let word = bits[idx >> 6] >> (idx & 63);
            if word != 0 {
                let found = idx + word.trailing_zeros() as usize;
                self.next_idx = found + 1;
                return Some(2 * found as u64 + 1);
            }
            idx = (idx >> 6) * 64 + 64;
        }
        None
    }
}

/// Ascending merge of primes and proper prime powers with their `Lambda`.
pub struct LambdaIter<'a> {
    primes: PrimeIter<'a>,
    powers: &'a [(u64, f64)],
    pending_prime: Option<u64>,
    power_cursor: usize,
}

impl Iterator for LambdaIter<'_> {
    type Item = (u64, f64);

    fn next(&mut self) -> Option<(u64, f64)> {
        if self.pending_prime.is_none() {
            self.pending_prime = self.primes.next();
        }
        let next_pow = self.powers.get(self.power_cursor).copied();
        match (self.pending_prime, next_pow) {
            (Some(p), Some((q, lg))) if q < p => {
                self.power_cursor += 1;
                Some((q, lg))
            }
            (Some(p), _) => {
                self.pending_prime = None;
                Some((p, (p as f64).ln()))
            }
            (None, Some((q, lg))) => {
                self.power_cursor += 1;
                Some((q, lg))
            }
            (None, None) => None,
        }
    }
}

/// A violation of the interval theorem on the scan grid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GoldbachViolation {
    pub x: f64,
    pub next_goldbach: u64,
    pub distance: f64,
    pub allowed: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct GoldbachScanReport {
    pub scanned_to: u64,
    pub constant: f64,
    pub violations: Vec<GoldbachViolation>,
    pub max_distance: f64,
    pub max_distance_at: f64,
    /// Even integers in `[6, N]` that are not sums of two odd primes.
    pub non_goldbach_even: Vec<u64>,
}

/// Scans every grid point `x` (integers and midpoints) in `[2, N]` and
/// confirms that `(x, x + C log^2 x]` contains a Goldbach number.
///
/// Within a run of grid points sharing the same next Goldbach number `g`,
/// the distance `g - x` decreases in `x` while the allowance `C log^2 x`
/// increases, so it suffices to test the smallest grid point of each run;
/// the reported maximum distance is attained there as well.
pub fn verify_goldbach_theorem(n: u64, c: f64, sieve: &PrimeSieve) -> Result<GoldbachScanReport> {
    if n < 2 {
        return Err(Error::Domain("scan bound must be at least 2".into()));
    }
    if !(c > 0.0) {
        return Err(Error::Domain("interval constant must be positive".into()));
    }
    let horizon = n + (c * (n as f64).ln().powi(2)).ceil() as u64 + 2;
    if horizon > sieve.limit {
        return Err(Error::OutOfRange {
            x: horizon as f64,
            limit: sieve.limit as f64,
        });
    }
    let mut report = GoldbachScanReport {
        scanned_to: n,
        constant: c,
        violations: Vec::new(),
        max_distance: 0.0,
        max_distance_at: f64::NAN,
        non_goldbach_even: Vec::new(),
    };
    let allowed = |x: f64| c * x.ln().powi(2);
    let check_region = |x0: f64, g_next: u64, report: &mut GoldbachScanReport| {
        let dist = g_next as f64 - x0;
        if dist > report.max_distance {
            report.max_distance = dist;
            report.max_distance_at = x0;
        }
        if dist > allowed(x0) {
            report.violations.push(GoldbachViolation {
                x: x0,
                next_goldbach: g_next,
                distance: dist,
                allowed: allowed(x0),
            });
        }
    };
    let mut prev_goldbach: Option<u64> = None;
    let mut m = 6u64;
    while m <= horizon {
        let is_g = sieve.is_goldbach(m);
        if !is_g {
            if m <= n {
                report.non_goldbach_even.push(m);
            }
            m += 2;
            continue;
        }
        match prev_goldbach {
            None => check_region(2.0, m, &mut report), // run [2, first) starts at x = 2
            Some(g) if g <= n => check_region(g as f64, m, &mut report),
            Some(_) => break, // run starts beyond the scan range
        }
        prev_goldbach = Some(m);
        if m > n && report.max_distance_at.is_finite() {
            // the run containing N has been closed
            break;
        }
        m += 2;
    }
    if prev_goldbach.is_none() {
        return Err(Error::Domain("no Goldbach number within horizon".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let s = build_sieve(100).unwrap();
        assert_eq!(s.prime_count(), 25);
        assert!(s.is_prime(2) && s.is_prime(3) && !s.is_prime(4));
        assert!(s.is_prime(97) && !s.is_prime(91) && !s.is_prime(1));
    }

    #[test]
    fn pi_1e6_is_78498() {
        let s = build_sieve(1_000_000).unwrap();
        assert_eq!(s.prime_count(), 78498);
        assert_eq!(s.count_primes(1_000_000.0).unwrap(), 78498);
    }

    #[test]
    fn matches_trial_division_to_20000() {
        let s = build_sieve(20_000).unwrap();
        let trial = |n: u64| {
            if n < 2 {
                return false;
            }
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 1;
            }
            true
        };
        for n in 0..=20_000u64 {
            assert_eq!(s.is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn psi_theta_small_values() {
        let s = build_sieve(1000).unwrap();
        assert_eq!(s.psi(1.0).unwrap(), 0.0);
        assert_eq!(s.theta(1.0).unwrap(), 0.0);
        // prime powers <= 10: 2, 3, 4, 5, 7, 8, 9
        let expect = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((s.psi(10.0).unwrap() - expect).abs() < 1e-12);
        let expect_theta = 2f64.ln() + 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((s.theta(10.0).unwrap() - expect_theta).abs() < 1e-12);
        assert!(s.psi(10.5).unwrap() == s.psi(10.0).unwrap());
    }

    #[test]
    fn psi_identity_against_theta_powers() {
        let s = build_sieve(200_000).unwrap();
        for x in [100.0f64, 1234.0, 99_991.0, 200_000.0] {
            let mut expect = KahanSum::new();
            let mut k = 1;
            loop {
                let root = x.powf(1.0 / k as f64);
                if root < 2.0 {
                    break;
                }
                expect.add(s.theta(root).unwrap());
                k += 1;
            }
            let psi = s.psi(x).unwrap();
            assert!(
                (psi - expect.total()).abs() < 1e-9 * psi.max(1.0),
                "x = {x}"
            );
        }
    }

    #[test]
    fn psi_close_to_x_at_1e6() {
        let s = build_sieve(1_000_000).unwrap();
        let x = 1e6;
        let err = (s.psi(x).unwrap() - x).abs();
        let bound = x.sqrt() * x.ln().powi(2) / (8.0 * std::f64::consts::PI);
        assert!(err <= bound, "err = {err}, bound = {bound}");
    }

    #[test]
    fn out_of_range_rejected() {
        let s = build_sieve(1000).unwrap();
        assert!(matches!(s.psi(2000.0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn capacity_budget_enforced() {
        assert!(matches!(
            build_sieve_with_budget(1_000_000_000, 1024),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn nth_prime_values() {
        let s = build_sieve(200).unwrap();
        assert_eq!(s.nth_prime(1).unwrap(), 2);
        assert_eq!(s.nth_prime(2).unwrap(), 3);
        assert_eq!(s.nth_prime(25).unwrap(), 97);
        assert!(s.nth_prime(0).is_err());
    }

    #[test]
    fn prime_iterator_matches_bits() {
        let s = build_sieve(10_000).unwrap();
        let from_iter: Vec<u64> = s.primes().collect();
        assert_eq!(from_iter.len() as u64, s.prime_count());
        assert_eq!(from_iter[0], 2);
        assert_eq!(*from_iter.last().unwrap(), 9973);
        assert!(from_iter.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn lambda_events_ascending_with_powers() {
        let s = build_sieve(100).unwrap();
        let events: Vec<(u64, f64)> = s.lambda_events().collect();
        let ns: Vec<u64> = events.iter().map(|e| e.0).collect();
        assert!(ns.windows(2).all(|w| w[0] < w[1]));
        assert!(ns.contains(&4) && ns.contains(&8) && ns.contains(&9) && ns.contains(&64));
        assert!(!ns.contains(&6));
        let total: f64 = events.iter().map(|e| e.1).sum();
        assert!((total - s.psi(100.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn goldbach_basics() {
        let s = build_sieve(1000).unwrap();
        assert!(s.is_goldbach(6)); // 3 + 3
        assert!(!s.is_goldbach(4)); // 2 + 2 only, and 2 is even
        assert!(s.is_goldbach(10));
        assert_eq!(s.goldbach_partner(10), Some(3));
        assert!(!s.is_goldbach(7));
        assert!(!s.is_goldbach(5));
    }

    #[test]
    fn goldbach_agrees_with_brute_force() {
        let s = build_sieve(10_000).unwrap();
        for n in (6..=10_000u64).step_by(2) {
            let brute = (3..=n / 2)
                .step_by(2)
                .any(|p| s.is_prime(p) && s.is_prime(n - p));
            assert_eq!(s.is_goldbach(n), brute, "n = {n}");
        }
    }

    #[test]
    fn scan_small_range() {
        let s = build_sieve(10_000).unwrap();
        let report = verify_goldbach_theorem(100, 123.0, &s).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.non_goldbach_even.is_empty());
        assert_eq!(report.max_distance, 4.0); // x = 2 to the first Goldbach number 6
        assert_eq!(report.max_distance_at, 2.0);
    }

    #[test]
    fn scan_10_4_clean() {
        let s = build_sieve(100_000).unwrap();
        let report = verify_goldbach_theorem(10_000, 123.0, &s).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.non_goldbach_even.is_empty());
    }

    #[test]
    fn scan_requires_horizon() {
        let s = build_sieve(1000).unwrap();
        assert!(matches!(
            verify_goldbach_theorem(1000, 123.0, &s),
            Err(Error::OutOfRange { .. })
        ));
    }
}
