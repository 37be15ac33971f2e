//! C ABI for the verification toolkit: opaque handles for the sieve and
//! the zero table, status codes for every fallible call, out-parameters
//! for values. All functions are panic-safe at the boundary.
//!
//! Ownership: `*_new`/`*_load` return handles owned by the caller, to be
//! released with the matching `*_free`. Handles are immutable after
//! construction and may be shared across threads.

use goldbach_explicit::constants;
use goldbach_explicit::error::Error;
use goldbach_explicit::primes::{self, PrimeSieve};
use goldbach_explicit::selberg::{self, CountFn, Window};
use goldbach_explicit::zeros::{self, ZeroTable};
use goldbach_explicit::zeta::{self, EvalConfig};
use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    PoleProximity = 3,
    Nonconvergence = 4,
    DivisionUnstable = 5,
    OutsideRadius = 6,
    OutOfRange = 7,
    Capacity = 8,
    ParseError = 9,
    IoError = 10,
    BoundViolated = 11,
    Panic = 12,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid message").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> GeStatus {
    match err {
        Error::PoleProximity(_) => GeStatus::PoleProximity,
        Error::Nonconvergence { .. } => GeStatus::Nonconvergence,
        Error::DivisionInstability { .. } => GeStatus::DivisionUnstable,
        Error::OutsideRadius { .. } => GeStatus::OutsideRadius,
        Error::OutOfRange { .. } => GeStatus::OutOfRange,
        Error::Capacity { .. } | Error::BreakpointBudget { .. } => GeStatus::Capacity,
        Error::Parse { .. } | Error::NonMonotone { .. } | Error::EmptyZeroTable => {
            GeStatus::ParseError
        }
        Error::Io(_) | Error::CacheCorrupt(_) => GeStatus::IoError,
        Error::BoundViolated { .. } | Error::TailDominates { .. } => GeStatus::BoundViolated,
        _ => GeStatus::InvalidArgument,
    }
}

fn guard<F: FnOnce() -> Result<(), GeStatus>>(f: F) -> GeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GeStatus::Ok,
        Ok(Err(status)) => status,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            GeStatus::Panic
        }
    }
}

fn fail(e: Error) -> GeStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

/// Copies the message of the most recent error on this thread into `buf`
/// (NUL-terminated, truncated to `len`). Returns the full message length.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null (query mode).
#[no_mangle]
pub unsafe extern "C" fn ge_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let borrow = e.borrow();
        let Some(msg) = borrow.as_ref() else { return 0 };
        let bytes = msg.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast(), n);
            // always NUL-terminate
            *buf.add(n - 1) = 0;
        }
        bytes.len()
    })
}

/// Opaque prime sieve handle.
pub struct GeSieve(PrimeSieve);
/// Opaque zero-ordinate table handle.
pub struct GeZeroTable(ZeroTable);

/// Builds a sieve up to `limit` (inclusive). On success stores a handle in
/// `out`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_build(limit: u64, out: *mut *mut GeSieve) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let sieve = primes::build_sieve(limit).map_err(fail)?;
        *out = Box::into_raw(Box::new(GeSieve(sieve)));
        Ok(())
    })
}

/// Releases a sieve handle. Null is a no-op.
///
/// # Safety
/// `sieve` must come from `ge_sieve_build` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_free(sieve: *mut GeSieve) {
    if !sieve.is_null() {
        drop(Box::from_raw(sieve));
    }
}

/// # Safety
/// `sieve` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_limit(sieve: *const GeSieve) -> u64 {
    if sieve.is_null() {
        return 0;
    }
    (*sieve).0.limit()
}

/// # Safety
/// `sieve` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_prime_count(sieve: *const GeSieve) -> u64 {
    if sieve.is_null() {
        return 0;
    }
    (*sieve).0.prime_count()
}

/// # Safety
/// `sieve` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_is_prime(sieve: *const GeSieve, n: u64) -> bool {
    if sieve.is_null() {
        return false;
    }
    (*sieve).0.is_prime(n)
}

/// `psi(x) = sum of Lambda(n) for n <= x`.
///
/// # Safety
/// `sieve` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_psi(sieve: *const GeSieve, x: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if sieve.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = (*sieve).0.psi(x).map_err(fail)?;
        Ok(())
    })
}

/// `theta(x) = sum of log p for p <= x`.
///
/// # Safety
/// `sieve` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_theta(sieve: *const GeSieve, x: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if sieve.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = (*sieve).0.theta(x).map_err(fail)?;
        Ok(())
    })
}

/// Whether `n` is a sum of two odd primes.
///
/// # Safety
/// `sieve` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_sieve_is_goldbach(
    sieve: *const GeSieve,
    n: u64,
    out: *mut bool,
) -> GeStatus {
    guard(|| {
        if sieve.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = (*sieve).0.is_goldbach(n);
        Ok(())
    })
}

/// Exact Selberg integral `J(x, delta)` for `psi` (`use_theta = false`) or
/// `theta` (`use_theta = true`).
///
/// # Safety
/// `sieve` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_selberg_integral(
    sieve: *const GeSieve,
    x: f64,
    delta: f64,
    use_theta: bool,
    out: *mut f64,
) -> GeStatus {
    guard(|| {
        if sieve.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let window = Window::new(delta).map_err(fail)?;
        let which = if use_theta { CountFn::Theta } else { CountFn::Psi };
        *out = selberg::selberg_integral(x, &window, which, &(*sieve).0).map_err(fail)?;
        Ok(())
    })
}

/// Loads a zero-ordinate table from a text file (one ascending ordinate
/// per line).
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_zeros_load(
    path: *const c_char,
    out: *mut *mut GeZeroTable,
) -> GeStatus {
    guard(|| {
        if path.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let path = CStr::from_ptr(path).to_str().map_err(|_| {
            set_error("path is not UTF-8".into());
            GeStatus::InvalidArgument
        })?;
        let table = zeros::load_zeros(std::path::Path::new(path)).map_err(fail)?;
        *out = Box::into_raw(Box::new(GeZeroTable(table)));
        Ok(())
    })
}

/// Releases a zero-table handle. Null is a no-op.
///
/// # Safety
/// `table` must come from `ge_zeros_load` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ge_zeros_free(table: *mut GeZeroTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ge_zeros_len(table: *const GeZeroTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).0.len()
}

/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ge_zeros_gamma_max(table: *const GeZeroTable) -> f64 {
    if table.is_null() {
        return f64::NAN;
    }
    (*table).0.gamma_max()
}

/// Exact count of ordinates `<= t`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ge_zero_count(
    table: *const GeZeroTable,
    t: f64,
    out: *mut u64,
) -> GeStatus {
    guard(|| {
        if table.is_null() || out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = zeros::zero_count(t, &(*table).0).map_err(fail)?;
        Ok(())
    })
}

/// `zeta(re + i im)` with absolute error at most `tol`.
///
/// # Safety
/// `out_re` and `out_im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ge_zeta(
    re: f64,
    im: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> GeStatus {
    guard(|| {
        if out_re.is_null() || out_im.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let cfg = EvalConfig::with_tolerance(tol);
        let v = zeta::zeta_em(goldbach_explicit::Complex::new(re, im), &cfg).map_err(fail)?;
        *out_re = v.re;
        *out_im = v.im;
        Ok(())
    })
}

/// `zeta'(re + i im)` under the same contract as `ge_zeta`.
///
/// # Safety
/// `out_re` and `out_im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ge_zeta_prime(
    re: f64,
    im: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> GeStatus {
    guard(|| {
        if out_re.is_null() || out_im.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let cfg = EvalConfig::with_tolerance(tol);
        let v =
            zeta::zeta_prime_em(goldbach_explicit::Complex::new(re, im), &cfg).map_err(fail)?;
        *out_re = v.re;
        *out_im = v.im;
        Ok(())
    })
}

/// `zeta'/zeta(1+it) + 1/(it)`, the pole-removed logarithmic derivative.
///
/// # Safety
/// `out_re` and `out_im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ge_regularized_logderiv(
    t: f64,
    tol: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> GeStatus {
    guard(|| {
        if out_re.is_null() || out_im.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let cfg = EvalConfig::with_tolerance(tol);
        let v = zeta::regularized_logderiv(t, &cfg).map_err(fail)?;
        *out_re = v.re;
        *out_im = v.im;
        Ok(())
    })
}

/// `|((1+delta)^(1/2+it) - 1)/(1/2+it)|`, the per-zero window weight.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_window_factor(delta: f64, t: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = zeros::window_factor(delta, t).map_err(fail)?;
        Ok(())
    })
}

/// `6 x 2.5571 / (1/8 - a^3)`, the final interval constant.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_goldbach_constant(a: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = constants::goldbach_constant(a).map_err(fail)?;
        Ok(())
    })
}

/// Smallest `x` with `C log^2 x / (2x) <= 1e-13`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_threshold_x(c: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = constants::threshold_x(c).map_err(fail)?;
        Ok(())
    })
}

/// The theta mean-value bracket at `(eta, x_floor)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_jtheta_constant(eta: f64, x_floor: f64, out: *mut f64) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        *out = constants::jtheta_constant(eta, x_floor).map_err(fail)?;
        Ok(())
    })
}

/// `C(kappa, lambda, eta) / (kappa^2 - 1)`, the psi mean-value ratio.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ge_c_ratio(
    kappa: f64,
    lambda: f64,
    eta: f64,
    out: *mut f64,
) -> GeStatus {
    guard(|| {
        if out.is_null() {
            return Err(GeStatus::NullArgument);
        }
        let p = constants::ProofParams {
            kappa,
            lambda,
            eta,
            ..Default::default()
        };
        *out = constants::c_ratio(&p).map_err(fail)?;
        Ok(())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ge_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
