//! Verification toolkit for the explicit short-interval Goldbach bound.
//!
//! Under RH, every interval `(x, x + 123 log^2 x]` with `x >= 2` contains a
//! Goldbach number (a sum of two odd primes). The proof of that statement
//! rests on a chain of explicit inequalities: bounds for `zeta'/zeta` on and
//! near the 1-line, zero-density kernel sums, a second moment of the
//! logarithmic derivative, Selberg-type integrals over Chebyshev functions,
//! a handful of prime sums with rigorous tails, and a final constant
//! optimization. This crate recomputes every desk-scale-checkable quantity
//! in that chain and re-derives the final constant 122.75 <= 123.
//!
//! Organization:
//! - [`zeta`]: Euler-Maclaurin evaluation of zeta and its derivative on
//!   `Re s >= 1/2`, the Laurent expansion near `s = 1`, and the 1-line
//!   bound checks.
//! - [`primes`]: segmented sieve with `psi`/`theta` checkpoint tables and
//!   Goldbach scans.
//! - [`prime_sums`]: prime sums with rigorous integral tail bounds.
//! - [`selberg`]: exact event-sweep evaluation of the Selberg integrals
//!   `J_psi` and `J_theta`.
//! - [`zeros`]: zero-ordinate tables, counting windows, kernel sums, and
//!   the truncated explicit formula.
//! - [`quad`] / [`moments`]: adaptive quadrature and the moment bounds for
//!   `F(t)` on the 1-line.
//! - [`constants`]: the constant pipeline from the mean-value theorems down
//!   to the final interval constant.
//! - [`checks`]: named verification suites (one per lemma) consumed by the
//!   CLI and the acceptance tests.

// `!(x > 0.0)` is used for domain guards on purpose: unlike `x <= 0.0` it
// also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cache;
pub mod checks;
pub mod cli;
pub mod constants;
pub mod error;
pub mod kahan;
pub mod moments;
pub mod prime_sums;
pub mod primes;
pub mod quad;
pub mod report;
pub mod selberg;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};

/// Complex values on and near the 1-line; all zeta-function values pass
/// through this type.
pub type Complex = num_complex::Complex64;
