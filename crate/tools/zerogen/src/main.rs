//! Generates a table of the first 100 000 ordinates of nontrivial zeros of
//! the Riemann zeta function, one per line, 9 decimal places.
//!
//! Method: sign-change scan of the real Riemann-Siegel Z function (main sum
//! plus the leading C0 correction for t >= 200, Euler-Maclaurin below), then
//! refinement of each bracket with an Euler-Maclaurin evaluation of
//! zeta(1/2 + it) rotated by exp(i*theta(t)). Consistency of the running
//! count against the zero-counting main term (T/2pi) log(T/2pi e) + 7/8 with
//! deviation 0.28 log T is checked every unit interval; any violation
//! triggers a finer rescan of that stretch.

use std::f64::consts::PI;
use std::io::Write;

const TARGET: usize = 100_000;

// B_2 .. B_22
const BERNOULLI: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

#[derive(Clone, Copy)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn scale(self, k: f64) -> C64 {
        C64::new(self.re * k, self.im * k)
    }
    fn inv(self) -> C64 {
        let d = self.re * self.re + self.im * self.im;
        C64::new(self.re / d, -self.im / d)
    }
    fn exp(self) -> C64 {
        let r = self.re.exp();
        let (s, c) = self.im.sin_cos();
        C64::new(r * c, r * s)
    }
}

/// Riemann-Siegel theta via the Stirling series; good to ~1e-11 for t >= 14.
fn rs_theta(t: f64) -> f64 {
    let t2 = t * t;
    t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t2)
        + 31.0 / (80640.0 * t * t2 * t2)
        + 127.0 / (430080.0 * t * t2 * t2 * t2)
}

/// zeta(1/2 + it) by Euler-Maclaurin with cutoff N ~ 1.3 t.
fn zeta_half_line(t: f64) -> C64 {
    let s = C64::new(0.5, t);
    let n_cut = 32.max((1.3 * t.abs()).ceil() as usize);
    // compensated accumulation of sum n^{-s}
    let (mut sre, mut cre, mut sim, mut cim) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for n in 1..=n_cut {
        let ln = (n as f64).ln();
        let amp = (-0.5 * ln).exp();
        // phase correction: recover the rounding of t*ln via fma; the true
        // phase is -(p + e), so rotate the computed term by -e to first order
        let p = t * ln;
        let e = t.mul_add(ln, -p);
        let (sn, cs) = p.sin_cos();
        let re = amp * (cs - e * sn);
        let im = amp * (-sn - e * cs);
        let y = re - cre;
        let v = sre + y;
        cre = (v - sre) - y;
        sre = v;
        let y = im - cim;
        let v = sim + y;
        cim = (v - sim) - y;
        sim = v;
    }
    let mut tot = C64::new(sre, sim);
    let nf = n_cut as f64;
    let lnn = nf.ln();
    let one_m_s = C64::new(0.5, -t);
    let npow_1ms = one_m_s.scale(lnn).exp(); // N^{1-s}
    let npow_ms = C64::new(-0.5, -t).scale(lnn).exp(); // N^{-s}
    tot = tot.add(npow_1ms.mul(C64::new(-0.5, t).inv()));
    tot = tot.sub(npow_ms.scale(0.5));
    let mut rising = s;
    let mut fact = 1.0f64;
    let n_inv2 = 1.0 / (nf * nf);
    let mut npow = npow_ms.scale(1.0 / nf); // N^{-s-1}
    for (k, b) in BERNOULLI.iter().enumerate().take(10) {
        let k = k + 1;
        fact *= ((2 * k - 1) * (2 * k)) as f64;
        tot = tot.add(rising.mul(npow).scale(b / fact));
        rising = rising
            .mul(C64::new(s.re + (2 * k - 1) as f64, s.im))
            .mul(C64::new(s.re + (2 * k) as f64, s.im));
        npow = npow.scale(n_inv2);
    }
    tot
}

/// Hardy Z via Euler-Maclaurin: Z(t) = Re(exp(i theta) zeta(1/2+it)).
fn z_em(t: f64) -> f64 {
    let z = zeta_half_line(t);
    let (s, c) = rs_theta(t).sin_cos();
    c * z.re - s * z.im
}

/// Riemann-Siegel Z with the C0 remainder term; absolute error ~ t^{-3/4}.
fn z_rs(t: f64) -> f64 {
    let th = rs_theta(t);
    let tau = (t / (2.0 * PI)).sqrt();
    let m = tau.floor();
    let mut sum = 0.0f64;
    let mi = m as usize;
    for n in 1..=mi {
        let nf = n as f64;
        sum += (th - t * nf.ln()).cos() / nf.sqrt();
    }
    sum *= 2.0;
    let p = tau - m;
    let mut cden = (2.0 * PI * p).cos();
    let mut pp = p;
    if cden.abs() < 1e-4 {
        pp = p + 2e-4;
        cden = (2.0 * PI * pp).cos();
    }
    let psi = (2.0 * PI * (pp * pp - pp - 0.0625)).cos() / cden;
    let sign = if mi % 2 == 0 { -1.0 } else { 1.0 };
    sum + sign * psi / tau.sqrt()
}

fn z_scan(t: f64) -> f64 {
    if t < 200.0 {
        z_em(t)
    } else {
        z_rs(t)
    }
}

/// Bisection + secant refinement of a sign change of z_em in [a, b].
fn refine(mut a: f64, mut b: f64) -> f64 {
    let mut fa = z_em(a);
    let mut fb = z_em(b);
    // scan used the cheaper evaluator; widen if the accurate one disagrees
    let mut widen = 0;
    while fa * fb > 0.0 {
        let w = b - a;
        a -= w;
        b += w;
        fa = z_em(a);
        fb = z_em(b);
        widen += 1;
        assert!(widen < 12, "failed to re-bracket near {a}");
    }
    for _ in 0..80 {
        if b - a < 5e-11 {
            break;
        }
        // secant step, clipped into the bracket; fall back to bisection
        let mut m = b - fb * (b - a) / (fb - fa);
        let third = (b - a) / 3.0;
        if !(m > a + 0.01 * third && m < b - 0.01 * third) {
            m = 0.5 * (a + b);
        }
        let fm = z_em(m);
        if fa * fm <= 0.0 {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

fn count_main(t: f64) -> f64 {
    t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 7.0 / 8.0
}


fn main() {
    let out_path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "zeros_100k.txt".to_string());
    let mut brackets: Vec<(f64, f64)> = Vec::with_capacity(TARGET + 16);
    let mut t = 14.0f64;
    let mut f_prev = z_scan(t);
    let mut next_check = 16.0f64;
    let mut stretch_start = t;
    eprintln!("scanning...");
    while brackets.len() < TARGET + 4 {
        let step = if t < 200.0 { 0.005 } else { 0.001 };
        let t2 = t + step;
        let f2 = z_scan(t2);
        if f_prev == 0.0 || f_prev * f2 < 0.0 {
            brackets.push((t, t2));
        }
        t = t2;
        f_prev = f2;
        if t >= next_check {
            // zero-count consistency over [0, t]; rescan finer on violation
            let dev = 0.28 * t.ln() + 1.5;
            let diff = brackets.len() as f64 - count_main(t);
            if diff.abs() > dev {
                eprintln!("count window violated at t={t}: rescanning {stretch_start}..{t}");
                let mut extra: Vec<(f64, f64)> = Vec::new();
                let fine = 0.0001;
                let mut u = stretch_start;
                let mut fu = z_scan(u);
                while u < t {
                    let u2 = u + fine;
                    let fu2 = z_scan(u2);
                    if fu * fu2 < 0.0 && !brackets.iter().any(|&(a, b)| a <= u && u2 <= b + 1e-12)
                    {
                        extra.push((u, u2));
                    }
                    u = u2;
                    fu = fu2;
                }
                if extra.is_empty() {
                    panic!("count violation at t={t} not resolved by rescan");
                }
                brackets.extend(extra);
                brackets.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
            }
            stretch_start = t;
            next_check += 2.0;
        }
    }
    eprintln!("found {} brackets, refining...", brackets.len());
    let mut zeros: Vec<f64> = Vec::with_capacity(brackets.len());
    for (i, &(a, b)) in brackets.iter().enumerate() {
        zeros.push(refine(a, b));
        if (i + 1) % 10000 == 0 {
            eprintln!("  refined {}", i + 1);
        }
    }
    zeros.sort_by(|x, y| x.partial_cmp(y).unwrap());
    zeros.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
    assert!(zeros.len() >= TARGET, "only {} zeros", zeros.len());
    zeros.truncate(TARGET);

    // spot checks against published low zeros
    let known = [
        (0usize, 14.134725141734694),
        (1, 21.022039638771555),
        (2, 25.010857580145688),
        (99, 236.5242296658162),
        (999, 1419.4224809459956),
    ];
    for (idx, val) in known {
        assert!(
            (zeros[idx] - val).abs() < 2e-8,
            "zero {} = {} expected {}",
            idx + 1,
            zeros[idx],
            val
        );
    }
    // final count-window sanity at the top of the table
    let gmax = zeros[TARGET - 1];
    let diff = TARGET as f64 - count_main(gmax);
    assert!(
        diff.abs() <= 0.28 * gmax.ln() + 1.5,
        "final count off: N={} main={}",
        TARGET,
        count_main(gmax)
    );

    let mut f = std::io::BufWriter::new(std::fs::File::create(&out_path).unwrap());
    for z in &zeros {
        writeln!(f, "{z:.9}").unwrap();
    }
    eprintln!("wrote {} ordinates to {} (gamma_max = {:.9})", TARGET, out_path, gmax);
}
