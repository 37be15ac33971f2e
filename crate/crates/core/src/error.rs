use crate::quad::QuadResult;
use crate::Complex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("s = {0} is within 1e-8 of the pole at s = 1; use the Laurent evaluator")]
    PoleProximity(Complex),

    #[error("series for s = {s} did not stabilize within {max_terms} terms")]
    Nonconvergence { s: Complex, max_terms: usize },

    #[error("|zeta(1+it)| = {magnitude:.3e} below 1e-12 at t = {t}; quotient unstable")]
    DivisionInstability { t: f64, magnitude: f64 },

    #[error("|s - 1| = {distance} exceeds the Laurent radius {radius}")]
    OutsideRadius { distance: f64, radius: f64 },

    #[error("argument {x} out of range (limit {limit})")]
    OutOfRange { x: f64, limit: f64 },

    #[error("sieve limit {limit} exceeds the memory budget of {budget} bytes")]
    Capacity { limit: u64, budget: u64 },

    #[error("breakpoint count exceeded budget of {budget}")]
    BreakpointBudget { budget: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("ordinates not strictly increasing at line {line}")]
    NonMonotone { line: usize },

    #[error("zero table is empty")]
    EmptyZeroTable,

    #[error("tail bound {tail:.3e} exceeds 10% of the asserted bound {rhs:.4}")]
    TailDominates { tail: f64, rhs: f64 },

    #[error("tail bound {tail:.3e} exceeds requested budget {budget:.3e}; raise the cutoff")]
    CutoffTooSmall { tail: f64, budget: f64 },

    #[error("max subdivisions reached; partial value {} +/- {}", partial.value, partial.error_estimate)]
    MaxSubdivision { partial: QuadResult },

    #[error("{name} = {value} violates the bound {bound}")]
    BoundViolated {
        name: &'static str,
        value: f64,
        bound: f64,
    },

    #[error("{0}")]
    Domain(String),

    #[error("unknown lemma {0:?}; expected one of 2.1, 2.2, 2.4, 2.5, 2.6-desk, A.1, A.2")]
    UnknownLemma(String),

    #[error("lemma {0} requires a zero table; pass --zeros <path>")]
    MissingZeros(&'static str),

    #[error("cache file rejected: {0}")]
    CacheCorrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code classification: assertion failures exit 1, usage and
    /// resource problems exit 2.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::BoundViolated { .. } | Error::TailDominates { .. } => 1,
            _ => 2,
        }
    }
}
