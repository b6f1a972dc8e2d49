#pragma once

#include <cstdint>

namespace cuelab::specfun {

// ln Gamma(z) for real z > 0. Fixed-coefficient Lanczos approximation,
// relative error below 1e-13 on [0.5, 1e6].
double log_gamma(double z);

// ln G(z) for real z > 0, where G is the Barnes G-function:
// G(1) = 1, G(z+1) = Gamma(z) G(z).
double log_barnes_g(double z);

// Spherical Bessel function j_nu(x) of the first kind, real order
// nu > -3/2, x >= 0 (x > 0 when nu < 0).
double sph_bessel_j(double order, double x);

// Split evaluation paths, exposed for cross-validation. The series is the
// ascending power series (multiprecision above the double cancellation
// limit); the closed path is the trigonometric form for integer n >= -1,
// evaluated by upward recurrence from j_0, j_1 (only stable for x >= n).
double sph_bessel_series(double order, double x);
double sph_bessel_closed(int n, double x);

struct PochResult {
    int sign;        // +1 or -1; 0 when the product vanishes
    double log_abs;  // ln |(a)_n|; -inf when zero
    bool is_zero;
};

// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1) in sign/log form.
// Negative-integer a with n > -a yields the explicit zero flag.
PochResult log_pochhammer(double a, long long n);

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

}  // namespace cuelab::specfun
