#include "frachardy/special_functions.hpp"

#include "frachardy/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace frachardy {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// zeta(k) - 1 for k = 2..40, computed with mpmath at 30 digits.
constexpr std::array<double, 39> kZetaMinusOne = {
    0.6449340668482264365,       0.2020569031595942854,       0.08232323371113819152,
    0.03692775514336992633,      0.01734306198444913971,      0.008349277381922826840,
    0.004077356197944339379,     0.002008392826082214418,     0.0009945751278180853371,
    0.0004941886041194645587,    0.0002460865533080482986,    0.0001227133475784891468,
    0.00006124813505870482926,   0.00003058823630702049355,   0.00001528225940865187173,
    7.637197637899762274e-6,     3.817293264999839856e-6,     1.908212716553938926e-6,
    9.539620338727961132e-7,     4.769329867878064631e-7,     2.384505027277329900e-7,
    1.192199259653110731e-7,     5.960818905125947961e-8,     2.980350351465228019e-8,
    1.490155482836504123e-8,     7.450711789835429492e-9,     3.725334024788457055e-9,
    1.862659723513049006e-9,     9.313274324196681829e-10,    4.656629065033784073e-10,
    2.328311833676505492e-10,    1.164155017270051978e-10,    5.820772087902700889e-11,
    2.910385044497099687e-11,    1.455192189104198424e-11,    7.275959835057481015e-12,
    3.637979547378651190e-12,    1.818989650307065948e-12,    9.094947840263889283e-13,
};

// ln Gamma(2 + z) for |z| <= 0.5:
//   z (1 - gamma) + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
double ln_gamma_2p(double z) {
    double sum = 0.0;
    double p = -z;  // (-z)^k
    for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
        p *= -z;
        const double term = kZetaMinusOne[i] * p / static_cast<double>(i + 2);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return z * (1.0 - kEulerGamma) + sum;
}

double ln_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_{2k} / (2k (2k-1)) for k = 1..8
    constexpr std::array<double, 8> c = {
        1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0,  -1.0 / 1680.0,
        1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
    };
    double series = 0.0;
    double p = inv;
    for (double ck : c) {
        series += ck * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

[[noreturn]] void domain_fail(const char* op, double x, const char* why) {
    throw DomainError(std::string(op) + ": argument " + std::to_string(x) + " " + why);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

} // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    // reduce to r in [-1, 1] with sin(pi x) = sin(pi r)
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) domain_fail("ln_gamma", x, "must be positive");
    if (std::isinf(x)) return x;
    if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
    if (x < 1.5) {
        // ln Gamma(1 + z) = ln Gamma(2 + z) - ln(1 + z)
        const double z = x - 1.0;
        return ln_gamma_2p(z) - std::log1p(z);
    }
    if (x < 2.5) return ln_gamma_2p(x - 2.0);
    if (x < 10.0) {
        double y = x;
        double prod = 1.0;
        while (y >= 2.5) {
            y -= 1.0;
            prod *= y;
        }
        return std::log(prod) + ln_gamma_2p(y - 2.0);
    }
    return ln_gamma_stirling(x);
}

double gamma(double x) {
    if (std::isnan(x)) domain_fail("gamma", x, "is NaN");
    if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at nonpositive integer " + std::to_string(x));
    if (x > 171.0) domain_fail("gamma", x, "overflows double precision");
    if (x < 0.0) {
        // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        return std::numbers::pi / (sin_pi(x) * gamma(1.0 - x));
    }
    double y = x;
    double factor = 1.0;
    while (y < 1.5) {
        factor /= y;
        y += 1.0;
    }
    while (y >= 2.5) {
        y -= 1.0;
        factor *= y;
    }
    return factor * std::exp(ln_gamma_2p(y - 2.0));
}

double abs_gamma_neg(double beta) {
    if (!(beta < 1.0)) domain_fail("abs_gamma_neg", beta, "must be below 1");
    if (beta == 0.0) throw PoleError("abs_gamma_neg: Gamma has a pole at 0");
    if (is_nonpositive_integer(-beta)) throw PoleError("abs_gamma_neg: pole at " + std::to_string(-beta));
    return std::abs(gamma(-beta));
}

double digamma(double x) {
    if (!(x > 0.0)) domain_fail("digamma", x, "must be positive");
    double shift = 0.0;
    while (x < 10.0) {
        shift += 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // sum_k B_{2k} / (2k x^{2k})
    const double series =
        inv2 * (1.0 / 12.0 -
                 inv2 * (1.0 / 120.0 -
                         inv2 * (1.0 / 252.0 -
                                 inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    return std::log(x) - 0.5 / x - series - shift;
}

double lower_gamma_scaled(double a, double z) {
    if (!(a > 0.0)) domain_fail("lower_gamma_scaled", a, "order must be positive");
    if (z < 0.0) domain_fail("lower_gamma_scaled", z, "argument must be nonnegative");
    if (z == 0.0) return 1.0 / a;
    // e^{-z} sum_k z^k / (a (a+1) ... (a+k)), all terms positive
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= z / (a + k);
        sum += term;
        if (term < 1e-17 * sum && a + k > z) break;
    }
    return std::exp(-z) * sum;
}

namespace {

// Ascending series for e^{-x} I_n(x), summed relative to a running log scale.
double bessel_series(int n, double x) {
    const double half = 0.5 * x;
    const double log_t0 = -x + n * std::log(half) - ln_gamma(n + 1.0);
    const double q = half * half;
    double term = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double ratio = q / ((k + 1.0) * (k + 1.0 + n));
        term *= ratio;
        sum += term;
        if (sum > 1e280) {
            sum *= 1e-280;
            term *= 1e-280;
            log_scale += 280.0 * std::numbers::ln10;
        }
        if (ratio < 1.0 && term < 1e-17 * sum) break;
    }
    const double log_val = log_t0 + log_scale + std::log(sum);
    if (log_val < -745.2) return 0.0;
    return std::exp(log_val);
}

// I_N / I_n ~ exp(-(N^2 - n^2) / (2x)) for N << x; starting where this is
// below e^{-45} keeps both the ratios and the normalization sum exact.
int miller_start(int max_order, double x) {
    const double n = max_order;
    return static_cast<int>(std::ceil(std::sqrt(n * n + 90.0 * x))) + 30;
}

} // namespace

std::vector<double> bessel_i_scaled_sequence(int max_order, double x) {
    if (max_order < 0) domain_fail("bessel_i_scaled_sequence", max_order, "order must be nonnegative");
    if (!(x >= 0.0)) domain_fail("bessel_i_scaled_sequence", x, "argument must be nonnegative");
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const int start = miller_start(max_order, x);
    const double two_over_x = 2.0 / x;
    double f_next = 0.0;  // f_{k+1}
    double f = 1e-300;    // f_k at k = start
    double norm = 0.0;    // f_0 + 2 sum_{k>=1} f_k
    for (int k = start; k >= 1; --k) {
        norm += 2.0 * f;
        if (k <= max_order) out[static_cast<std::size_t>(k)] = f;
        const double f_prev = f_next + k * two_over_x * f;
        f_next = f;
        f = f_prev;
        if (f > 1e250) {
            f *= 1e-250;
            f_next *= 1e-250;
            norm *= 1e-250;
            for (int j = k; j <= max_order; ++j) out[static_cast<std::size_t>(j)] *= 1e-250;
        }
    }
    norm += f;
    out[0] = f;
    for (double& v : out) v /= norm;
    return out;
}

double bessel_i_scaled(int n, double x) {
    if (n < 0) domain_fail("bessel_i_scaled", n, "order must be nonnegative");
    if (!(x >= 0.0) || std::isinf(x)) domain_fail("bessel_i_scaled", x, "argument must be finite and nonnegative");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= std::max(20.0, static_cast<double>(n))) return bessel_series(n, x);
    return bessel_i_scaled_sequence(n, x)[static_cast<std::size_t>(n)];
}

} // namespace frachardy
