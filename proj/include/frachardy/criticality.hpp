#pragma once

#include "frachardy/quadrature.hpp"
#include "frachardy/riesz_kernel.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frachardy {

enum class Criticality { PositiveCritical, NullCritical, Subcritical };
enum class Verdict { Convergent, LogDivergent, Divergent };

std::string to_string(Criticality c);
std::string to_string(Verdict v);

/// Analytic classification of w_{sigma,alpha}: positive critical below
/// alpha0, null-critical at alpha0 (within 1e-12), subcritical above.
Criticality classify(double sigma, int dimension, double alpha);

/// sum_{|x|_inf <= R} kappa_{sigma-alpha}(x) kappa_{-alpha}(x) from the
/// numerator and denominator tables of the weight.
double summability_partial(const KernelTable& numerator, const KernelTable& denominator, int radius);

/// Dyadic shell sums S(r) = sum_{r < |x| <= 2r} kappa_{sigma-alpha} kappa_{-alpha}
/// in the Euclidean norm, one per radius.
std::vector<double> shell_sums(const KernelTable& numerator, const KernelTable& denominator,
                               std::span<const int> radii);

/// Least-squares slope of log(S(r)/r) against log r, i.e. the decay exponent
/// of the summand integrated over a sphere of radius r. The summand decays
/// like |x|^{-(2d - 4 alpha + 2 sigma)}, so the expected slope is
/// 4 alpha - 2 sigma - d - 1: below -1 the series converges, at -1 it
/// diverges logarithmically. Needs at least three radii, each >= 10.
double shell_exponent(const KernelTable& numerator, const KernelTable& denominator, std::span<const int> radii);

/// The verdict for a shell exponent, with a band of +-0.2 around -1.
Verdict verdict_for(double exponent);

struct AlphaScan {
    double alpha = 0.0;
    std::vector<std::pair<int, double>> partial_sums;  ///< (R, sum over |x|_inf <= R)
    std::vector<double> shell_sums;                    ///< S(r) per radius
    double shell_exponent = 0.0;
    double expected_exponent = 0.0;                    ///< 4 alpha - 2 sigma - d - 1
    Verdict verdict = Verdict::Convergent;
    Criticality classification = Criticality::PositiveCritical;
};

struct ScanReport {
    int dimension = 0;
    double sigma = 0.0;
    double alpha0 = 0.0;
    std::vector<int> radii;
    QuadratureSpec quadrature;
    std::vector<AlphaScan> scans;
};

/// Summability scan over several exponents, building tables of radius
/// 2 max(radii).
ScanReport scan(double sigma, int dimension, std::span<const double> alphas, std::span<const int> radii,
                const QuadratureSpec& q = {});

struct NullEnergyReport {
    double epsilon = 0.0;
    double alpha = 0.0;         ///< alpha0 - epsilon
    double energy = 0.0;        ///< (Q - w_{sigma,alpha0})(h), h = kappa_{-alpha} on the box
    double form = 0.0;          ///< Q(h)
    double interior = 0.0;      ///< sum_box (w_{sigma,alpha} - w_{sigma,alpha0}) h^2
    double boundary = 0.0;      ///< energy - interior = (Q - w_{sigma,alpha})(h)
    std::vector<std::string> warnings;
};

/// (Q - w_{sigma,alpha0}) applied to the restriction of kappa_{-(alpha0 - eps)}
/// to the l-infinity box of radius R, for 0 < eps < alpha0 - sigma. The
/// restriction makes (Q - w_{sigma,alpha}) of the truncated ground state
/// positive; that part is reported as the boundary energy and a warning is
/// attached when it exceeds 25% of the energy.
NullEnergyReport null_sequence_energy(double sigma, int dimension, double epsilon, int radius,
                                      const QuadratureSpec& q = {});

/// The same for several eps at once, sharing the kappa_sigma and alpha0 tables.
std::vector<NullEnergyReport> null_sequence_energies(double sigma, int dimension, std::span<const double> epsilons,
                                                     int radius, const QuadratureSpec& q = {});

struct RatioEstimate {
    double estimate = 0.0;  ///< extrapolated limit of w_alpha / w_alpha0
    double expected = 0.0;  ///< Psi(alpha) / Psi(alpha0)
    std::vector<std::pair<int, double>> samples;
};

/// Samples w_{sigma,alpha}(x) / w_{sigma,alpha0}(x) on x = (r, 0, ..., 0) and
/// extrapolates to r = infinity by a least-squares fit in 1/r^2.
RatioEstimate weight_ratio_at_infinity(double sigma, int dimension, double alpha, std::span<const int> radii,
                                       const QuadratureSpec& q = {});

} // namespace frachardy
