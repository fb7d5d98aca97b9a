#pragma once

#include "frachardy/lattice_function.hpp"
#include "frachardy/quadrature.hpp"
#include "frachardy/riesz_kernel.hpp"

namespace frachardy {

/// Model parameters with an exponent alpha strictly inside (sigma, d/2).
class HardyParams {
public:
    HardyParams(ModelParams params, double alpha);
    HardyParams(int dimension, double sigma, double alpha) : HardyParams(ModelParams(dimension, sigma), alpha) {}

    const ModelParams& params() const { return params_; }
    int dimension() const { return params_.dimension(); }
    double sigma() const { return params_.sigma(); }
    double alpha() const { return alpha_; }

private:
    ModelParams params_;
    double alpha_;
};

double alpha0(const ModelParams& params);

/// w_{sigma,alpha}(x) = kappa_{sigma-alpha}(x) / kappa_{-alpha}(x), finite and
/// positive everywhere including the origin.
double hardy_weight(const HardyParams& hp, const LatticePoint& x, const QuadratureSpec& q = {});

/// Psi_{sigma,d}(alpha) = 4^sigma Gamma(d/2 - alpha + sigma) Gamma(alpha)
///                        / (Gamma(d/2 - alpha) Gamma(alpha - sigma)),
/// the limit of w_{sigma,alpha}(x) |x|^{2 sigma}.
double psi(double sigma, int dimension, double alpha);

/// d/d alpha ln Psi = -psi(d/2 + sigma - alpha) + psi(alpha) + psi(d/2 - alpha) - psi(alpha - sigma),
/// with psi the digamma function. Vanishes at alpha0.
double psi_log_derivative(double sigma, int dimension, double alpha);

/// c_{d,sigma} = 4^sigma Gamma(d/4 + sigma/2)^2 / Gamma(d/4 - sigma/2)^2.
double optimal_constant(double sigma, int dimension);

/// Kernel tables needed to evaluate the weight and the form on a box.
struct HardyTables {
    HardyParams params;
    KernelTable kappa_sigma;   ///< radius 2R, with mass
    KernelTable numerator;     ///< kappa_{sigma-alpha}, radius R
    KernelTable denominator;   ///< kappa_{-alpha}, radius R

    /// Tables for test functions supported in the box of radius R.
    static HardyTables build(const HardyParams& hp, int radius, const QuadratureSpec& q = {});

    int radius() const { return numerator.radius(); }
    double weight(std::span<const int> coords) const;
};

/// Q(phi) - sum_x w_{sigma,alpha}(x) phi(x)^2, nonnegative by the Hardy
/// inequality up to rounding.
double hardy_deficit(const HardyTables& tables, const LatticeFunction& phi);

} // namespace frachardy
