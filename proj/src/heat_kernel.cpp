#include "frachardy/heat_kernel.hpp"

#include "frachardy/errors.hpp"
#include "frachardy/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace frachardy {

double heat_kernel_1d(double t, int m) {
    if (!(t >= 0.0)) throw DomainError("heat_kernel_1d: time must be nonnegative");
    if (t == 0.0) return m == 0 ? 1.0 : 0.0;
    return bessel_i_scaled(std::abs(m), 2.0 * t);
}

std::vector<double> heat_kernel_1d_profile(double t, int max_m) {
    if (!(t >= 0.0)) throw DomainError("heat_kernel_1d_profile: time must be nonnegative");
    if (t == 0.0) {
        std::vector<double> out(static_cast<std::size_t>(max_m) + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    return bessel_i_scaled_sequence(max_m, 2.0 * t);
}

double heat_kernel(double t, const LatticePoint& x) {
    double p = 1.0;
    for (int c : x.coords()) {
        p *= heat_kernel_1d(t, c);
        if (p == 0.0) break;
    }
    return p;
}

double gaussian_main_term(double t, const LatticePoint& x) {
    if (!(t > 0.0)) throw DomainError("gaussian_main_term: time must be positive");
    const double d = x.dimension();
    return std::pow(4.0 * std::numbers::pi * t, -0.5 * d) * std::exp(-static_cast<double>(x.norm_squared()) / (4.0 * t));
}

double small_t_bound_constant(const LatticePoint& x) {
    if (x.is_zero()) throw DomainError("small_t_bound: x must be nonzero");
    return std::exp(-ln_gamma(x.norm_inf() + 1.0));
}

double small_t_bound(double t, const LatticePoint& x) {
    if (x.is_zero()) throw DomainError("small_t_bound: x must be nonzero");
    const int m = x.norm_inf();
    if (!(t > 0.0 && t < m)) throw DomainError("small_t_bound: requires 0 < t < |x|_inf");
    return std::exp(m * std::log(t) - ln_gamma(m + 1.0));
}

} // namespace frachardy
