/* C interface for the goldbach-explicit verification toolkit. */

#ifndef GOLDBACH_EXPLICIT_H
#define GOLDBACH_EXPLICIT_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum GeStatus {
  GE_STATUS_OK = 0,
  GE_STATUS_NULL_ARGUMENT = 1,
  GE_STATUS_INVALID_ARGUMENT = 2,
  GE_STATUS_POLE_PROXIMITY = 3,
  GE_STATUS_NONCONVERGENCE = 4,
  GE_STATUS_DIVISION_UNSTABLE = 5,
  GE_STATUS_OUTSIDE_RADIUS = 6,
  GE_STATUS_OUT_OF_RANGE = 7,
  GE_STATUS_CAPACITY = 8,
  GE_STATUS_PARSE_ERROR = 9,
  GE_STATUS_IO_ERROR = 10,
  GE_STATUS_BOUND_VIOLATED = 11,
  GE_STATUS_PANIC = 12,
} GeStatus;

/**
 * Opaque prime sieve handle.
 */
typedef struct GeSieve GeSieve;

/**
 * Opaque zero-ordinate table handle.
 */
typedef struct GeZeroTable GeZeroTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the message of the most recent error on this thread into `buf`
 * (NUL-terminated, truncated to `len`). Returns the full message length.
 *
 * # Safety
 * `buf` must point to `len` writable bytes, or be null (query mode).
 */
size_t ge_last_error_message(char *buf, size_t len);

/**
 * Builds a sieve up to `limit` (inclusive). On success stores a handle in
 * `out`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_sieve_build(uint64_t limit, struct GeSieve **out);

/**
 * Releases a sieve handle. Null is a no-op.
 *
 * # Safety
 * `sieve` must come from `ge_sieve_build` and not be used afterwards.
 */
void ge_sieve_free(struct GeSieve *sieve);

/**
 * # Safety
 * `sieve` must be a live handle.
 */
uint64_t ge_sieve_limit(const struct GeSieve *sieve);

/**
 * # Safety
 * `sieve` must be a live handle.
 */
uint64_t ge_sieve_prime_count(const struct GeSieve *sieve);

/**
 * # Safety
 * `sieve` must be a live handle.
 */
bool ge_sieve_is_prime(const struct GeSieve *sieve, uint64_t n);

/**
 * `psi(x) = sum of Lambda(n) for n <= x`.
 *
 * # Safety
 * `sieve` must be a live handle; `out` must be valid.
 */
enum GeStatus ge_sieve_psi(const struct GeSieve *sieve, double x, double *out);

/**
 * `theta(x) = sum of log p for p <= x`.
 *
 * # Safety
 * `sieve` must be a live handle; `out` must be valid.
 */
enum GeStatus ge_sieve_theta(const struct GeSieve *sieve, double x, double *out);

/**
 * Whether `n` is a sum of two odd primes.
 *
 * # Safety
 * `sieve` must be a live handle; `out` must be valid.
 */
enum GeStatus ge_sieve_is_goldbach(const struct GeSieve *sieve, uint64_t n, bool *out);

/**
 * Exact Selberg integral `J(x, delta)` for `psi` (`use_theta = false`) or
 * `theta` (`use_theta = true`).
 *
 * # Safety
 * `sieve` must be a live handle; `out` must be valid.
 */
enum GeStatus ge_selberg_integral(const struct GeSieve *sieve,
                                  double x,
                                  double delta,
                                  bool use_theta,
                                  double *out);

/**
 * Loads a zero-ordinate table from a text file (one ascending ordinate
 * per line).
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be valid.
 */
enum GeStatus ge_zeros_load(const char *path, struct GeZeroTable **out);

/**
 * Releases a zero-table handle. Null is a no-op.
 *
 * # Safety
 * `table` must come from `ge_zeros_load` and not be used afterwards.
 */
void ge_zeros_free(struct GeZeroTable *table);

/**
 * # Safety
 * `table` must be a live handle.
 */
size_t ge_zeros_len(const struct GeZeroTable *table);

/**
 * # Safety
 * `table` must be a live handle.
 */
double ge_zeros_gamma_max(const struct GeZeroTable *table);

/**
 * Exact count of ordinates `<= t`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be valid.
 */
enum GeStatus ge_zero_count(const struct GeZeroTable *table, double t, uint64_t *out);

/**
 * `zeta(re + i im)` with absolute error at most `tol`.
 *
 * # Safety
 * `out_re` and `out_im` must be valid pointers.
 */
enum GeStatus ge_zeta(double re, double im, double tol, double *out_re, double *out_im);

/**
 * `zeta'(re + i im)` under the same contract as `ge_zeta`.
 *
 * # Safety
 * `out_re` and `out_im` must be valid pointers.
 */
enum GeStatus ge_zeta_prime(double re, double im, double tol, double *out_re, double *out_im);

/**
 * `zeta'/zeta(1+it) + 1/(it)`, the pole-removed logarithmic derivative.
 *
 * # Safety
 * `out_re` and `out_im` must be valid pointers.
 */
enum GeStatus ge_regularized_logderiv(double t, double tol, double *out_re, double *out_im);

/**
 * `|((1+delta)^(1/2+it) - 1)/(1/2+it)|`, the per-zero window weight.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_window_factor(double delta, double t, double *out);

/**
 * `6 x 2.5571 / (1/8 - a^3)`, the final interval constant.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_goldbach_constant(double a, double *out);

/**
 * Smallest `x` with `C log^2 x / (2x) <= 1e-13`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_threshold_x(double c, double *out);

/**
 * The theta mean-value bracket at `(eta, x_floor)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_jtheta_constant(double eta, double x_floor, double *out);

/**
 * `C(kappa, lambda, eta) / (kappa^2 - 1)`, the psi mean-value ratio.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GeStatus ge_c_ratio(double kappa, double lambda, double eta, double *out);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ge_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GOLDBACH_EXPLICIT_H */
