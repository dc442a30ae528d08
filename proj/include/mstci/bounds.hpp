#pragma once

#include <gmpxx.h>

namespace mstci {

// Exact-rational bound data for a (n, m) pair. q and r come from the
// integer division 2*nu = q*(n-1) + r with 0 <= r < n-1.
struct BoundsReport {
    int n = 0;
    int m = 0;
    int nu = 0;
    long long q = 0;
    long long r = 0;
    mpq_class l;          // (nu^2/(n-1) - nu)/2; may be negative
    long long l_hat = 0;  // (n-1)*C(q,2) + q*r
};

// Proven lower bound (nu^2/(n-1) - nu)/2 on the intersection number.
// Requires n >= 2 and n-1 <= m <= n(n-1)/2.
mpq_class lower_bound_l(int n, int m);

// Conjectured tight lower bound (n-1)*C(q,2) + q*r.
long long lower_bound_l_hat(int n, int m);

// Both algebraic forms of l_hat; they agree for every valid (n, m) and the
// pair is exposed so callers can cross-assert.
struct LHatForms {
    long long grouped = 0;  // (n-1)*C(q,2) + q*r
    long long split = 0;    // (n-1-r)*C(q,2) + r*C(q+1,2)
};
LHatForms lower_bound_l_hat_forms(int n, int m);

// Evaluates sum C(x_i, 2) at the equal-split point x_i = nu/(n-1) and spot
// checks the constrained minimum: perturbing any coordinate pair by
// +/- 1/1000 (keeping the sum fixed) must not decrease the value. Returns
// the equal-split value, which equals lower_bound_l. Requires n >= 3.
mpq_class convex_minimum_check(int n, int nu);

// Underestimation ratio l/cap for the universal-vertex family whose non-hub
// vertices all have degree k: exactly (k-3)/(4(k-2)), in [1/8, 1/4).
// Requires k >= 4.
mpq_class regular_family_ratio(int k);

BoundsReport bounds_report(int n, int m);

}  // namespace mstci
