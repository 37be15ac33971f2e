//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Heavy fixtures (the 5e8 sieve and the 100k-ordinate table) are shared
//! across criteria. Expected wall time is on the order of fifteen minutes
//! single-threaded, dominated by the two certified integrals.

use goldbach_explicit::checks;
use goldbach_explicit::constants::registry;
use goldbach_explicit::moments;
use goldbach_explicit::prime_sums::{appendix_sum, AppendixSum};
use goldbach_explicit::primes::{build_sieve, verify_goldbach_theorem, PrimeSieve};
use goldbach_explicit::report::Record;
use goldbach_explicit::selberg::{selberg_integral, CountFn, Window};
use goldbach_explicit::zeros::{self, load_zeros, ZeroTable};
use goldbach_explicit::zeta::{self, EvalConfig};
use goldbach_explicit::Complex;
use rand::Rng;
use rand::SeedableRng;
use std::path::Path;
use std::sync::OnceLock;

fn sieve() -> &'static PrimeSieve {
    static S: OnceLock<PrimeSieve> = OnceLock::new();
    S.get_or_init(|| build_sieve(checks::A11_SIEVE_LIMIT).expect("sieve to 5e8"))
}

fn table() -> &'static ZeroTable {
    static T: OnceLock<ZeroTable> = OnceLock::new();
    T.get_or_init(|| {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_100k.txt");
        load_zeros(&path).expect("bundled zero table")
    })
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn report(criterion: &str, records: &[Record]) {
    let pass = records.iter().all(|r| r.pass);
    println!(
        "[criterion {criterion}] {}",
        if pass { "PASS" } else { "FAIL" }
    );
    for r in records {
        println!(
            "    {} {} = {:.10e}{}{}",
            if r.pass { "ok " } else { "FAIL" },
            r.name,
            r.value,
            r.bound.map_or(String::new(), |b| format!(" vs {b}")),
            r.error_estimate
                .map_or(String::new(), |e| format!(" (+/- {e:.2e})")),
        );
    }
    assert!(pass, "criterion {criterion} failed");
}

#[test]
fn crit_01_appendix_a11_full_cutoff() {
    let a11 = appendix_sum(AppendixSum::A1_1, checks::A11_CUTOFF_INDEX, sieve(), None).unwrap();
    let records = vec![
        Record::new("a11_head", a11.partial)
            .with_pass((a11.partial - registry::A11_HEAD.value).abs() <= 1e-5),
        Record::new("a11_tail_bound", a11.tail_bound).with_constant(registry::A11_TAIL),
        Record::new("a11_verified_upper", a11.verified_upper()).with_constant(registry::A11_BOUND),
    ];
    report("1: appendix sum (1) head 1.721381, tail <= 0.000104, total < 1.7215", &records);
}

#[test]
fn crit_02_appendix_a12_a13() {
    let a12 = appendix_sum(AppendixSum::A1_2, 1_000_000, sieve(), None).unwrap();
    let a13 = appendix_sum(AppendixSum::A1_3, 1_000_000, sieve(), None).unwrap();
    let records = vec![
        Record::new("a12_verified_upper", a12.verified_upper()).with_constant(registry::A12_BOUND),
        Record::new("a13_verified_upper", a13.verified_upper()).with_constant(registry::A13_BOUND),
    ];
    report("2: appendix sums (2) < 0.8053 and (3) < 0.982", &records);
}

#[test]
fn crit_03_lambda_sq_desk_range() {
    let records = checks::check_lambda_sq(sieve(), 1e8).unwrap();
    report("3: Lambda^2/n partial sum under log^2(x)/2 + 4.5222 at x = 1e8", &records);
}

#[test]
fn crit_04_reference_integral_with_stability() {
    let coarse = moments::reference_integral(&cfg(), Some(table()), 0.9).unwrap();
    let fine = moments::reference_integral(&cfg(), Some(table()), 0.09).unwrap();
    let records = vec![
        Record::new("reference_value_plus_error", coarse.value + coarse.error_estimate)
            .with_error(coarse.error_estimate)
            .with_constant(registry::REFERENCE_BOUND),
        Record::new("reference_error", coarse.error_estimate).with_upper_bound(1.0),
        Record::new(
            "reference_stability_rel",
            (coarse.value - fine.value).abs() / fine.value.abs(),
        )
        .with_upper_bound(1e-3),
    ];
    report("4: reference integral <= 8400, error <= 1, stable under 10x tightening", &records);
}

#[test]
fn crit_04b_second_moment_companion() {
    let r = moments::second_moment_check(2e4, &cfg(), Some(table()), 20.0).unwrap();
    let records = vec![
        Record::new("second_moment_ratio_T2e4", r.ratio)
            .with_constant(registry::SECOND_MOMENT_COEFF),
        Record::new("second_moment_integrand_mean", r.integrand_mean)
            .with_pass((r.integrand_mean - registry::A12_BOUND.value).abs() <= 0.05),
    ];
    report("4b: desk second moment ratio <= 0.8056; mean near 0.8053", &records);
}

#[test]
fn crit_05_regularized_bound_grid() {
    let records = checks::check_regularized_bound(&cfg()).unwrap();
    report("5: |zeta'/zeta(1+it) + 1/(it)| <= 2.635 on 1e4 points of (0, 1/2]", &records);
}

#[test]
fn crit_06_logderiv_grid() {
    let records = checks::check_logderiv_grid(&cfg()).unwrap();
    report("6: |zeta'/zeta(sigma+it)| / (4 log t) < 1 on the 11 x 200 grid", &records);
}

#[test]
fn crit_07_kernel_sums_with_tails() {
    let records = checks::check_kernel_sums(table()).unwrap();
    report("7: kernel sums with rigorous tails at t in {4, 10, 1e2, 1e3, 1e4, 3e4}", &records);
}

#[test]
fn crit_08_window_factor_random_grid() {
    let records = checks::check_window_factor(10_000, 0x2515).unwrap();
    report("8: window factor <= min(delta, ell/|t|) on 1e4 random pairs", &records);
}

#[test]
fn crit_09_constant_pipeline() {
    let records = checks::check_constants().unwrap();
    report("9: constant pipeline (C ratio, alpha, beta, optimizer, brackets, threshold)", &records);
}

#[test]
fn crit_10_moment_split() {
    let records = checks::check_moment_split(None).unwrap();
    report("10: moment split I1 <= 4.8, I2 <= 34794.8, total <= 6.8598, tail <= 8.9454", &records);
}

#[test]
fn crit_11_goldbach_scan_1e8() {
    let scan = verify_goldbach_theorem(100_000_000, 123.0, sieve()).unwrap();
    let records = vec![
        Record::new("interval_violations", scan.violations.len() as f64).with_upper_bound(0.0),
        Record::new("non_goldbach_even", scan.non_goldbach_even.len() as f64)
            .with_upper_bound(0.0),
        Record::new("max_distance_to_next", scan.max_distance)
            .with_anchor(format!("at x = {}", scan.max_distance_at)),
    ];
    report("11: (x, x + 123 log^2 x] scan to 1e8; every even in [6, 1e8] is Goldbach", &records);
}

#[test]
fn crit_12a_selberg_sweep_vs_riemann_oracle() {
    let s = sieve();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EBE);
    let mut records = Vec::new();
    for case in 0..10 {
        let x = rng.gen_range(1_000.0f64..100_000.0);
        let delta = 10f64.powf(rng.gen_range(-3.0..-0.52));
        let w = Window::new(delta).unwrap();
        let exact = selberg_integral(x, &w, CountFn::Psi, s).unwrap();
        // midpoint Riemann sum with incremental psi counting
        let events: Vec<(u64, f64)> = s
            .lambda_events()
            .take_while(|&(q, _)| (q as f64) <= (1.0 + delta) * x + 1.0)
            .collect();
        let nodes = 4_000_000usize;
        let h = (x - 1.0) / nodes as f64;
        let (mut lo, mut hi) = (0usize, 0usize);
        let (mut psi_lo, mut psi_hi) = (0.0f64, 0.0f64);
        let mut acc = 0.0f64;
        for i in 0..nodes {
            let y = 1.0 + (i as f64 + 0.5) * h;
            while lo < events.len() && (events[lo].0 as f64) <= y {
                psi_lo += events[lo].1;
                lo += 1;
            }
            while hi < events.len() && (events[hi].0 as f64) <= (1.0 + delta) * y {
                psi_hi += events[hi].1;
                hi += 1;
            }
            let v = psi_hi - psi_lo - delta * y;
            acc += v * v * h;
        }
        let rel = (exact - acc).abs() / exact.abs().max(1e-30);
        records.push(
            Record::new(format!("selberg_oracle_case{case}_x{x:.0}_d{delta:.1e}"), rel)
                .with_upper_bound(1e-3),
        );
    }
    report("12a: exact Selberg sweep vs Riemann-sum oracle (rel 1e-3, 10 cases)", &records);
}

#[test]
fn crit_12b_explicit_formula_truncation() {
    let s = sieve();
    let t = table();
    let mut records = Vec::new();
    for y in [2.5, 100.5, 1000.5] {
        let full = zeros::explicit_formula_psi(y, t, s, None).unwrap();
        let half = zeros::explicit_formula_psi(y, t, s, Some(50_000)).unwrap();
        // doubling the zero count must not grow the residual beyond twice
        // the truncation noise floor
        let ok = full.residual.abs() <= (2.0 * half.residual.abs()).max(2e-3);
        records.push(
            Record::new(format!("explicit_residual_y{y}"), full.residual.abs())
                .with_pass(ok && full.residual.abs() < y.sqrt() * y.ln()),
        );
    }
    report("12b: explicit-formula residual non-increase under zero doubling", &records);
}

#[test]
fn crit_12c_psi_theta_identity() {
    let s = sieve();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xCAFE);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let x = rng.gen_range(10.0..s.limit() as f64);
        let psi = s.psi(x).unwrap();
        let mut expect = 0.0;
        let mut k = 1u32;
        loop {
            let root = x.powf(1.0 / k as f64);
            if root < 2.0 {
                break;
            }
            expect += s.theta(root).unwrap();
            k += 1;
        }
        worst = worst.max((psi - expect).abs() / psi.max(1.0));
    }
    let records = vec![Record::new("psi_theta_identity_worst_rel", worst).with_upper_bound(1e-12)];
    report("12c: psi(x) = sum_k theta(x^(1/k)) on 100 random x", &records);
}

#[test]
fn crit_12d_zeta_symmetry_and_derivative() {
    let c = cfg();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7E7A);
    let mut worst_conj = 0.0f64;
    for _ in 0..100 {
        let s = Complex::new(rng.gen_range(0.9..2.5), rng.gen_range(0.5..200.0));
        let a = zeta::zeta_em(s, &c).unwrap();
        let b = zeta::zeta_em(s.conj(), &c).unwrap();
        worst_conj = worst_conj.max((a.conj() - b).norm());
    }
    let mut worst_fd = 0.0f64;
    for _ in 0..50 {
        let s = Complex::new(rng.gen_range(1.0..2.0), rng.gen_range(0.0..50.0));
        let h = 1e-5;
        let fd = (zeta::zeta_em(s + h, &c).unwrap() - zeta::zeta_em(s - h, &c).unwrap())
            / (2.0 * h);
        let v = zeta::zeta_prime_em(s, &c).unwrap();
        worst_fd = worst_fd.max((v - fd).norm());
    }
    let records = vec![
        Record::new("conjugate_symmetry_worst", worst_conj).with_upper_bound(2e-9),
        Record::new("finite_difference_worst", worst_fd).with_upper_bound(1e-6),
    ];
    report("12d: conjugate symmetry and derivative consistency", &records);
}

#[test]
fn crit_12e_constant_report_determinism() {
    let p = goldbach_explicit::constants::ProofParams::default();
    let a = serde_json::to_vec(&goldbach_explicit::constants::build_constant_report(&p).unwrap())
        .unwrap();
    let b = serde_json::to_vec(&goldbach_explicit::constants::build_constant_report(&p).unwrap())
        .unwrap();
    let records =
        vec![Record::new("constant_report_bytes_equal", (a == b) as u8 as f64)
            .with_pass(a == b)];
    report("12e: ConstantReport byte-identical across runs", &records);
}

/// Full-range consistency of the two parameterizations of the reference
/// integral; roughly doubles the criterion-4 cost, so opt-in.
#[test]
#[ignore = "long-running; cargo test --test acceptance -- --ignored"]
fn extra_reference_parameterization_consistency() {
    let (a, b) = moments::reference_consistency(&cfg(), Some(table()), 1.0, 0.5, 1e4).unwrap();
    let records = vec![Record::new(
        "parameterization_diff",
        (a.value - b.value).abs(),
    )
    .with_upper_bound(a.error_estimate + b.error_estimate + 1e-6)];
    report("extra: t-integral vs substituted 2u-integral", &records);
}

/// The 1e5 endpoint of the desk second moment, recorded as a regression.
#[test]
#[ignore = "long-running; cargo test --test acceptance -- --ignored"]
fn extra_second_moment_1e5() {
    let r = moments::second_moment_check(1e5, &cfg(), Some(table()), 50.0).unwrap();
    let records = vec![
        Record::new("second_moment_ratio_T1e5", r.ratio)
            .with_constant(registry::SECOND_MOMENT_COEFF),
        Record::new("second_moment_mean_T1e5", r.integrand_mean)
            .with_pass((r.integrand_mean - registry::A12_BOUND.value).abs() <= 0.05),
    ];
    report("extra: second moment to 1e5", &records);
}
