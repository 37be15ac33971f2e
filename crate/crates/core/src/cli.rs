//! Command-line orchestration: one subcommand per verification family,
//! deterministic reports, content-hashed configuration.

use crate::cache;
use crate::checks;
use crate::constants::{self, registry, ProofParams};
use crate::error::{Error, Result};
use crate::moments;
use crate::primes::PrimeSieve;
use crate::report::{OutputFormat, Record, Report};
use crate::selberg::{self, CountFn, Window};
use crate::zeros::ZeroTable;
use crate::zeta::EvalConfig;
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "goldbach-explicit",
    version,
    about = "Numerical verification of the explicit short-interval Goldbach bound"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Zero-ordinate table (plain text, one ascending ordinate per line).
    #[arg(long, global = true)]
    zeros: Option<PathBuf>,

    /// Sieve limit; commands that need more raise it themselves.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    sieve_limit: u64,

    /// Absolute evaluator tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Downgrade assertions whose hypotheses are unreachable at desk scale
    /// (x >= 1e13, T >= 4e13) to recorded findings.
    #[arg(long, global = true)]
    desk_mode: bool,

    /// Worker threads for parallel kernels (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cache directory (overrides GOLDBACH_EXPLICIT_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one lemma-level check suite: 2.1, 2.2, 2.4, 2.5, 2.6-desk, A.1, A.2.
    VerifyLemma { name: String },
    /// Evaluate the whole constant pipeline.
    Constants {
        /// Override parameters, e.g. kappa=100,lambda=1.677,eta=5e-11,a=1e-13.
        #[arg(long)]
        params: Option<String>,
    },
    /// Certified integrals: reference, second-moment, consistency.
    Integrate {
        name: String,
        /// Endpoint for second-moment (defaults to 2e4).
        #[arg(long, default_value_t = 2e4)]
        t_end: f64,
    },
    /// Confirm (x, x + C log^2 x] contains a Goldbach number for all
    /// integer and half-integer x <= N.
    ScanGoldbach { n: u64, c: f64 },
    /// Exact Selberg integral J(x, delta) for psi or theta.
    Selberg { x: f64, delta: f64, which: String },
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RunConfig {
    pub zeros_path: Option<PathBuf>,
    pub sieve_limit: u64,
    pub tolerance: f64,
    pub desk_mode: bool,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    fn eval_config(&self) -> EvalConfig {
        EvalConfig::with_tolerance(self.tolerance)
    }

    fn hash(&self, command: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(serde_json::to_vec(self).expect("config serialization"));
        hasher.update(command.as_bytes());
        cache::hex_string(&hasher.finalize()[..8])
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    if cli.jobs > 0 {
        // ignore failure when a global pool already exists (tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    if !(cli.tol > 0.0) {
        return Err(Error::Domain("--tol must be positive".into()));
    }
    let config = RunConfig {
        zeros_path: cli.zeros.clone(),
        sieve_limit: cli.sieve_limit,
        tolerance: cli.tol,
        desk_mode: cli.desk_mode,
        jobs: cli.jobs,
        cache_dir: cli.cache_dir.clone(),
    };
    let command_line = format!("{:?}", cli.command);
    let mut report = Report::new(command_name(&cli.command), config.hash(&command_line));
    build_report(&cli, &config, &mut report)?;
    if cli.desk_mode {
        downgrade_empirical(&mut report);
    }
    match &cli.out {
        Some(path) => {
            let f = std::fs::File::create(path)?;
            report.write(cli.format, f)?;
        }
        None => report.write(cli.format, std::io::stdout().lock())?,
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn command_name(c: &Command) -> String {
    match c {
        Command::VerifyLemma { name } => format!("verify-lemma {name}"),
        Command::Constants { .. } => "constants".into(),
        Command::Integrate { name, .. } => format!("integrate {name}"),
        Command::ScanGoldbach { n, c } => format!("scan-goldbach {n} {c}"),
        Command::Selberg { x, delta, which } => format!("selberg {x} {delta} {which}"),
    }
}

fn build_report(cli: &Cli, config: &RunConfig, report: &mut Report) -> Result<()> {
    let cfg = config.eval_config();
    match &cli.command {
        Command::VerifyLemma { name } => match name.as_str() {
            "2.1" => report.extend(checks::check_logderiv_grid(&cfg)?),
            "2.2" => {
                let table = require_zeros(config, "2.2")?;
                report.extend(checks::check_kernel_sums(&table)?);
            }
            "2.4" => report.extend(checks::check_regularized_bound(&cfg)?),
            "2.5" => report.extend(checks::check_window_factor(10_000, 0x2515)?),
            "2.6-desk" => {
                let table = require_zeros(config, "2.6-desk")?;
                report.extend(checks::check_zero_log_sums(&table)?);
            }
            "A.1" => {
                let limit = config.sieve_limit.max(checks::A11_SIEVE_LIMIT);
                let sieve = sieve(config, limit)?;
                report.extend(checks::check_appendix_sums(&sieve, true)?);
            }
            "A.2" => {
                let limit = config.sieve_limit.max(100_000_000);
                let sieve = sieve(config, limit)?;
                report.extend(checks::check_lambda_sq(&sieve, 1e8)?);
            }
            other => return Err(Error::UnknownLemma(other.to_string())),
        },
        Command::Constants { params } => {
            let p = parse_params(params.as_deref())?;
            let full = constants::build_constant_report(&p)?;
            report.extend(checks::check_constants()?);
            report.push(
                Record::new("report_c_over_k2m1", full.c_over_k2m1)
                    .with_anchor(full.consistency_note.clone()),
            );
            report.push(Record::new("report_goldbach_c", full.goldbach_c).with_upper_bound(123.0));
            report.push(Record::new("report_threshold_x", full.threshold_x));
        }
        Command::Integrate { name, t_end } => match name.as_str() {
            "reference" => {
                let table = optional_zeros(config)?;
                let q = moments::reference_integral(&cfg, table.as_ref(), 0.9)?;
                report.push(
                    Record::new("reference_integral", q.value + q.error_estimate)
                        .with_error(q.error_estimate)
                        .with_constant(registry::REFERENCE_BOUND)
                        .with_anchor(format!(
                            "{}; {} panels",
                            registry::REFERENCE_BOUND.anchor, q.panel_count
                        )),
                );
            }
            "second-moment" => {
                let table = optional_zeros(config)?;
                let r = moments::second_moment_check(*t_end, &cfg, table.as_ref(), 5.0)?;
                report.push(
                    Record::new("second_moment_ratio", r.ratio)
                        .with_error(r.quad.error_estimate)
                        .with_constant(registry::SECOND_MOMENT_COEFF)
                        .with_anchor(format!(
                            "{} (empirical at desk scale)",
                            registry::SECOND_MOMENT_COEFF.anchor
                        )),
                );
                report.push(
                    Record::new("second_moment_integrand_mean", r.integrand_mean).with_anchor(
                        "heuristic anchor: Lambda^2 series 0.8053; report-only",
                    ),
                );
            }
            "consistency" => {
                let table = optional_zeros(config)?;
                let (a, b) = moments::reference_consistency(&cfg, table.as_ref(), 1.0, 0.5, 1e4)?;
                report.push(
                    Record::new("parameterization_diff", (a.value - b.value).abs())
                        .with_upper_bound(a.error_estimate + b.error_estimate + 1e-6)
                        .with_anchor("t-integral vs substituted 2u-integral of the same moment"),
                );
            }
            "split" => {
                report.extend(checks::check_moment_split(None)?);
            }
            other => {
                return Err(Error::Domain(format!(
                    "unknown integral {other:?}; expected reference, second-moment, consistency, split"
                )))
            }
        },
        Command::ScanGoldbach { n, c } => {
            let horizon = n + (c * (*n as f64).ln().powi(2)).ceil() as u64 + 2;
            let sieve = sieve(config, config.sieve_limit.max(horizon))?;
            let scan = crate::primes::verify_goldbach_theorem(*n, *c, &sieve)?;
            report.push(
                Record::new("goldbach_violations", scan.violations.len() as f64)
                    .with_upper_bound(0.0)
                    .with_anchor(format!(
                        "(x, x + {c} log^2 x] must contain a Goldbach number up to {n}"
                    )),
            );
            report.push(
                Record::new("non_goldbach_even", scan.non_goldbach_even.len() as f64)
                    .with_upper_bound(0.0)
                    .with_anchor("every even n in [6, N] is a sum of two odd primes"),
            );
            report.push(
                Record::new("max_distance_to_next", scan.max_distance).with_anchor(format!(
                    "worst grid point x = {}",
                    scan.max_distance_at
                )),
            );
        }
        Command::Selberg { x, delta, which } => {
            let which = match which.as_str() {
                "psi" => CountFn::Psi,
                "theta" => CountFn::Theta,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown counting function {other:?}; expected psi or theta"
                    )))
                }
            };
            let window = Window::new(*delta)?;
            let need = ((1.0 + delta) * x).ceil() as u64 + 1;
            let sieve = sieve(config, config.sieve_limit.max(need))?;
            let j = selberg::selberg_integral(*x, &window, which, &sieve)?;
            report.push(
                Record::new(format!("selberg_{which:?}_x{x}_d{delta}"), j)
                    .with_anchor("exact breakpoint-sweep value"),
            );
            let denom = delta * (2.0001 / delta).ln().powi(2) * x * x;
            let coeff = match which {
                CountFn::Psi => registry::JPSI_COEFF,
                CountFn::Theta => registry::JTHETA_COEFF,
            };
            report.push(
                Record::new("selberg_ratio", j / denom)
                    .with_constant(coeff)
                    .with_anchor(format!("{} (empirical below x = 1e13)", coeff.anchor)),
            );
        }
    }
    Ok(())
}

fn sieve(config: &RunConfig, limit: u64) -> Result<PrimeSieve> {
    cache::sieve_cached(limit, config.cache_dir.as_deref())
}

fn require_zeros(config: &RunConfig, lemma: &'static str) -> Result<ZeroTable> {
    match &config.zeros_path {
        Some(p) => cache::zeros_cached(p, config.cache_dir.as_deref()),
        None => Err(Error::MissingZeros(lemma)),
    }
}

fn optional_zeros(config: &RunConfig) -> Result<Option<ZeroTable>> {
    config
        .zeros_path
        .as_ref()
        .map(|p| cache::zeros_cached(p, config.cache_dir.as_deref()))
        .transpose()
}

/// Parses `kappa=..,lambda=..,eta=..[,delta=..][,a=..]` overrides.
fn parse_params(spec: Option<&str>) -> Result<ProofParams> {
    let mut p = ProofParams::default();
    let Some(spec) = spec else { return Ok(p) };
    for part in spec.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| {
            Error::Domain(format!("bad parameter {part:?}; expected key=value"))
        })?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|e| Error::Domain(format!("bad value for {key}: {e}")))?;
        match key.trim() {
            "kappa" => p.kappa = v,
            "lambda" => p.lambda = v,
            "eta" => p.eta = v,
            "delta" => p.delta = v,
            "a" => p.a = v,
            other => return Err(Error::Domain(format!("unknown parameter {other:?}"))),
        }
    }
    p.validate()?;
    Ok(p)
}

/// In desk mode, failures of statements whose hypotheses sit outside the
/// reachable range become recorded findings instead of failures.
fn downgrade_empirical(report: &mut Report) {
    let mut pass = true;
    for r in &mut report.records {
        if !r.pass {
            let empirical = r
                .anchor
                .as_deref()
                .is_some_and(|a| a.contains("empirical") || a.contains("recorded"));
            if empirical {
                r.pass = true;
                let note = " [recorded finding: outside the stated hypothesis range]";
                r.anchor = Some(format!("{}{note}", r.anchor.as_deref().unwrap_or("")));
            }
        }
        pass &= r.pass;
    }
    report.pass = pass;
}
