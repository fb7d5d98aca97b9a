#include "frachardy/asymptotics.hpp"

#include "frachardy/errors.hpp"
#include "frachardy/hardy_weights.hpp"
#include "frachardy/regression.hpp"
#include "frachardy/riesz_kernel.hpp"

#include <cmath>

namespace frachardy {

namespace {

template <class F>
AsymptoticFit fit(std::span<const int> radii, F deviation) {
    if (radii.size() < 3) throw InsufficientDataError("asymptotic fit: need at least three radii");
    AsymptoticFit out;
    std::vector<double> x;
    std::vector<double> y;
    for (int r : radii) {
        if (r < 1) throw DomainError("asymptotic fit: radii must be positive");
        const double dev = deviation(r);
        out.deviations.emplace_back(r, dev);
        x.push_back(r);
        y.push_back(dev);
    }
    const auto line = fit_loglog(x, y);
    out.slope = line.slope;
    out.intercept = line.intercept;
    return out;
}

} // namespace

AsymptoticFit riesz_asymptotic_fit(double alpha, int dimension, std::span<const int> radii, const QuadratureSpec& q) {
    const double c = riesz_asymptotic_constant(alpha, dimension);
    return fit(radii, [&](int r) {
        const auto x = LatticePoint::axis(dimension, r);
        return std::abs(riesz(alpha, x, q) * std::pow(r, dimension + 2.0 * alpha) / c - 1.0);
    });
}

AsymptoticFit weight_asymptotic_fit(double sigma, int dimension, double alpha, std::span<const int> radii,
                                    const QuadratureSpec& q) {
    const HardyParams hp(dimension, sigma, alpha);
    const double target = psi(sigma, dimension, alpha);
    return fit(radii, [&](int r) {
        const auto x = LatticePoint::axis(dimension, r);
        return std::abs(hardy_weight(hp, x, q) * std::pow(r, 2.0 * sigma) - target) / target;
    });
}

} // namespace frachardy
