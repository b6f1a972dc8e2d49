#include "specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "kahan.hpp"
#include "mp.hpp"

namespace cuelab::specfun {

namespace {

constexpr double kLn2Pi = 1.8378770664093454835606594728112352797;
constexpr double kPi = 3.1415926535897932384626433832795028842;

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficient set as
// circulated via Press et al. / GSL derivations). Relative error of the
// resulting ln Gamma is below ~1e-14 for real z >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double z) {
    // valid for z >= 0.5
    const double w = z - 1.0;
    const double t = w + 7.5;
    double series = kLanczos[0];
    for (int i = 1; i < 9; ++i) series += kLanczos[i] / (w + i);
    return 0.5 * kLn2Pi + (w + 0.5) * std::log(t) - t + std::log(series);
}

// ln G(1+u) by the Weierstrass-type product, u in (-1, 8]. The m-sum is
// truncated at kBarnesTerms and the omitted tail is restored analytically:
// each tail term m ln(1+u/m) - u + u^2/(2m) expands into sum_{j>=3}
// (-1)^{j-1} u^j / (j m^{j-1}), so the tail is sum_j (-1)^{j-1} (u^j/j)
// S_{j-1} with S_p = sum_{m>M} m^{-p} evaluated by Euler-Maclaurin.
constexpr int kBarnesTerms = 400;

double tail_power_sum(double p, double a) {
    // sum_{m >= a} m^{-p} for p > 1, a >> 1 (Euler-Maclaurin)
    double s = std::pow(a, 1.0 - p) / (p - 1.0);
    s += 0.5 * std::pow(a, -p);
    s += p * std::pow(a, -p - 1.0) / 12.0;
    s -= p * (p + 1.0) * (p + 2.0) * std::pow(a, -p - 3.0) / 720.0;
    s += p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) * std::pow(a, -p - 5.0) / 30240.0;
    return s;
}

double log_barnes_g_product(double w) {
    // ln G(w) for w in (0, 9); product argument u = w - 1 in (-1, 8)
    const double u = w - 1.0;
    KahanSum sum;
    for (int m = 1; m <= kBarnesTerms; ++m) {
        const double dm = static_cast<double>(m);
        sum.add(u * u / (2.0 * dm) - u + dm * std::log1p(u / dm));
    }
    // analytic tail
    const double a = kBarnesTerms + 1.0;
    double tail = 0.0;
    double upow = u * u * u;  // u^j starting at j = 3
    for (int j = 3; j <= 80; ++j) {
        const double term = (j % 2 ? 1.0 : -1.0) * upow / j * tail_power_sum(j - 1.0, a);
        tail += term;
        if (std::abs(term) < 1e-19 * (1.0 + std::abs(tail))) break;
        upow *= u;
    }
    return 0.5 * u * kLn2Pi - 0.5 * u * (u + 1.0) - 0.5 * euler_gamma * u * u +
           sum.value() + tail;
}

bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x); }

// Ascending series of j_nu via the cylinder-order representation
// j_nu(x) = sqrt(pi/2x) J_{nu+1/2}(x); the Gamma arguments nu+3/2+m stay
// positive for every admissible order nu > -3/2.
double sph_series_double(double order, double x) {
    const double cnu = order + 0.5;  // cylinder order
    double term = std::exp(cnu * std::log(0.5 * x) - log_gamma(cnu + 1.0));
    const double q = -0.25 * x * x;
    KahanSum sum;
    sum.add(term);
    for (int m = 0; m < 400; ++m) {
        term *= q / ((m + 1.0) * (cnu + m + 1.0));
        sum.add(term);
        if (std::abs(term) < 1e-18 * std::abs(sum.value()) && m > 2) break;
    }
    return std::sqrt(0.5 * kPi / x) * sum.value();
}

double sph_series_mp(double order, double x) {
    const mp50 cnu = mp50(order) + mp50(0.5);
    const mp50 mx(x);
    mp50 term = exp(cnu * log(mx / 2) - boost::math::lgamma(cnu + 1));
    const mp50 q = -mx * mx / 4;
    mp50 sum = term;
    for (int m = 0; m < 2000; ++m) {
        term *= q / ((m + 1) * (cnu + m + 1));
        sum += term;
        if (abs(term) < mp50(1e-45) * abs(sum) && m > 2) break;
    }
    return to_double(sqrt(mp50(kPi) / (2 * mx)) * sum);
}

// Large-argument Hankel asymptotics; valid once x dominates the order
// (we gate on x >= max(40, nu^2 + 10)).
double sph_hankel_double(double order, double x) {
    const double cnu = order + 0.5;
    const double mu = 4.0 * cnu * cnu;
    const double chi = x - (0.5 * cnu + 0.25) * kPi;
    double p = 0.0, q = 0.0;
    double a = 1.0;  // a_0
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 40; ++j) {
        const int m = j / 2;
        const double signed_a = ((m % 2) ? -a : a);
        if (j % 2 == 0)
            p += signed_a;
        else
            q += signed_a;
        const double odd = 2.0 * j + 1.0;
        const double next = a * (mu - odd * odd) / ((j + 1.0) * 8.0 * x);
        if (std::abs(next) >= prev) break;  // asymptotic series turned
        prev = std::abs(next);
        a = next;
        if (std::abs(a) < 1e-19) {
            const int m2 = (j + 1) / 2;
            const double sa = ((m2 % 2) ? -a : a);
            if ((j + 1) % 2 == 0)
                p += sa;
            else
                q += sa;
            break;
        }
    }
    return (p * std::cos(chi) - q * std::sin(chi)) / x;
}

}  // namespace

double log_gamma(double z) {
    require_finite(z, "log_gamma");
    if (z <= 0.0) throw domain_error("log_gamma: requires z > 0");
    if (z >= 0.5) return log_gamma_lanczos(z);
    // reflection into [0.5, inf); sin(pi z) > 0 for z in (0, 1/2)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma_lanczos(1.0 - z);
}

double log_barnes_g(double z) {
    require_finite(z, "log_barnes_g");
    if (z <= 0.0) throw domain_error("log_barnes_g: requires z > 0");
    // reduce with G(w) = Gamma(w-1) G(w-1) down to the product range,
    // landing at fractional-part + 8
    double acc = 0.0;
    double w = z;
    while (w >= 9.0) {
        w -= 1.0;
        acc += log_gamma(w);
    }
    return acc + log_barnes_g_product(w);
}

double sph_bessel_series(double order, double x) {
    require_finite(order, "sph_bessel_series");
    require_finite(x, "sph_bessel_series");
    if (x < 0.0) throw domain_error("sph_bessel_series: requires x >= 0");
    if (order <= -1.5) throw domain_error("sph_bessel_series: order must exceed -3/2");
    if (x == 0.0) {
        if (order == 0.0) return 1.0;
        if (order > 0.0) return 0.0;
        throw domain_error("sph_bessel_series: divergent at x = 0 for negative order");
    }
    if (x <= 9.0) return sph_series_double(order, x);
    if (x <= 41.0) return sph_series_mp(order, x);
    throw domain_error("sph_bessel_series: cancellation beyond multiprecision budget for x > 41");
}

double sph_bessel_closed(int n, double x) {
    require_finite(x, "sph_bessel_closed");
    if (x <= 0.0) throw domain_error("sph_bessel_closed: requires x > 0");
    if (n < -1) throw domain_error("sph_bessel_closed: integer order >= -1");
    if (n == -1) return std::cos(x) / x;
    const double s = std::sin(x), c = std::cos(x);
    double jm1 = c / x;          // j_{-1}
    double j0 = s / x;           // j_0
    if (n == 0) return j0;
    // upward recurrence j_{m+1} = (2m+1)/x j_m - j_{m-1}; stable for x >= n
    for (int m = 0; m < n; ++m) {
        const double jp = (2.0 * m + 1.0) / x * j0 - jm1;
        jm1 = j0;
        j0 = jp;
    }
    return j0;
}

double sph_bessel_j(double order, double x) {
    require_finite(order, "sph_bessel_j");
    require_finite(x, "sph_bessel_j");
    if (x < 0.0) throw domain_error("sph_bessel_j: requires x >= 0");
    if (order <= -1.5) throw domain_error("sph_bessel_j: order must exceed -3/2");
    if (x == 0.0) {
        if (order == 0.0) return 1.0;
        if (order > 0.0) return 0.0;
        throw domain_error("sph_bessel_j: divergent at x = 0 for negative order");
    }
    if (is_integral(order) && order >= -1.0 && order < 1e6) {
        const int n = static_cast<int>(order);
        if (x < std::max(1.0, static_cast<double>(n))) return sph_series_double(order, x);
        return sph_bessel_closed(n, x);
    }
    const double cnu = order + 0.5;
    if (x <= 9.0) return sph_series_double(order, x);
    if (x >= std::max(40.0, cnu * cnu + 10.0)) return sph_hankel_double(order, x);
    if (x <= 41.0) return sph_series_mp(order, x);
    throw overflow_error("sph_bessel_j: no stable evaluation path for this order/argument");
}

PochResult log_pochhammer(double a, long long n) {
    require_finite(a, "log_pochhammer");
    if (n < 0) throw domain_error("log_pochhammer: requires n >= 0");
    if (n == 0) return {+1, 0.0, false};
    // vanishing product: a is a non-positive integer hit by the walk
    if (a <= 0.0 && is_integral(a) && -a < static_cast<double>(n))
        return {0, -std::numeric_limits<double>::infinity(), true};
    if (a > 0.0)
        return {+1, log_gamma(a + static_cast<double>(n)) - log_gamma(a), false};
    int sign = +1;
    double log_abs = 0.0;
    for (long long j = 0; j < n; ++j) {
        const double f = a + static_cast<double>(j);
        if (f < 0.0) sign = -sign;
        log_abs += std::log(std::abs(f));
    }
    return {sign, log_abs, false};
}

}  // namespace cuelab::specfun

namespace cuelab {

namespace {
warning_handler g_warning_handler;
}

void set_warning_handler(warning_handler handler) { g_warning_handler = std::move(handler); }

void emit_warning(const std::string& message) {
    if (g_warning_handler) g_warning_handler(message);
}

}  // namespace cuelab
