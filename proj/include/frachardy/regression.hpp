#pragma once

#include <span>

namespace frachardy {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least-squares line y = intercept + slope x. Needs at least two
/// distinct abscissae.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log y against log x.
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y);

} // namespace frachardy
