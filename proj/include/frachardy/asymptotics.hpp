#pragma once

#include "frachardy/quadrature.hpp"

#include <span>
#include <utility>
#include <vector>

namespace frachardy {

struct AsymptoticFit {
    std::vector<std::pair<int, double>> deviations;  ///< (r, relative deviation at r e_1)
    double slope = 0.0;                              ///< log-log slope of the deviations
    double intercept = 0.0;
};

/// |kappa_alpha(r e_1) r^{d + 2 alpha} / C_{d,alpha} - 1| along the first axis.
AsymptoticFit riesz_asymptotic_fit(double alpha, int dimension, std::span<const int> radii,
                                   const QuadratureSpec& q = {});

/// |w_{sigma,alpha}(r e_1) r^{2 sigma} - Psi(alpha)| / Psi(alpha) along the first axis.
AsymptoticFit weight_asymptotic_fit(double sigma, int dimension, double alpha, std::span<const int> radii,
                                    const QuadratureSpec& q = {});

} // namespace frachardy
