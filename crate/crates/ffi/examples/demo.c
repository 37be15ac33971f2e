/* Build (from the workspace root, after `cargo build --release`):
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      -Ltarget/release -lgoldbach_explicit_ffi -lm -o demo
 *   LD_LIBRARY_PATH=target/release ./demo
 */
#include <goldbach_explicit.h>
#include <stdio.h>

int main(void) {
    GeSieve *sieve = NULL;
    if (ge_sieve_build(1000000, &sieve) != GE_STATUS_OK) {
        fprintf(stderr, "sieve build failed\n");
        return 1;
    }
    printf("pi(1e6) = %llu\n", (unsigned long long)ge_sieve_prime_count(sieve));

    double psi;
    ge_sieve_psi(sieve, 1e6, &psi);
    printf("psi(1e6) = %.6f\n", psi);

    bool goldbach;
    ge_sieve_is_goldbach(sieve, 123456, &goldbach);
    printf("123456 is a Goldbach number: %s\n", goldbach ? "yes" : "no");

    double re, im;
    if (ge_zeta(2.0, 0.0, 1e-9, &re, &im) == GE_STATUS_OK) {
        printf("zeta(2) = %.12f\n", re);
    }

    double c;
    ge_goldbach_constant(1e-13, &c);
    printf("interval constant = %.4f\n", c);

    double x;
    ge_threshold_x(c, &x);
    printf("threshold x = %.4e\n", x);

    /* error path: psi beyond the sieve limit */
    GeStatus s = ge_sieve_psi(sieve, 1e9, &psi);
    char msg[128];
    ge_last_error_message(msg, sizeof msg);
    printf("expected error (status %d): %s\n", (int)s, msg);

    ge_sieve_free(sieve);
    return 0;
}
