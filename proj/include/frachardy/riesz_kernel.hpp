#pragma once

#include "frachardy/lattice.hpp"
#include "frachardy/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace frachardy {

/// Riesz kernel kappa_alpha(x) on Z^d for alpha in (-d/2, 1].
///
/// kappa_0 is the indicator of the origin, kappa_1 the indicator of the
/// nearest neighbours, kappa_alpha(0) = 0 for alpha > 0, and otherwise
///   kappa_alpha(x) = 1/|Gamma(-alpha)| int_0^inf p_t(x) t^{-1-alpha} dt.
double riesz(double alpha, const LatticePoint& x, const QuadratureSpec& q = {});

/// The same integral with the integrand damped by e^{-eps t}, eps > 0.
/// Increases to riesz(alpha, x) as eps decreases to 0.
double riesz_regularized(double alpha, const LatticePoint& x, double eps, const QuadratureSpec& q = {});

/// C_{d,alpha} = 4^alpha Gamma(d/2 + alpha) / (pi^{d/2} |Gamma(-alpha)|).
double riesz_asymptotic_constant(double alpha, int dimension);

/// C_{d,alpha} |x|^{-d-2 alpha}, the leading large-|x| behaviour of kappa_alpha.
double riesz_asymptotic(double alpha, const LatticePoint& x);

/// m_sigma = sum_{y != 0} kappa_sigma(y)
///         = 1/|Gamma(-sigma)| int_0^inf (1 - p_t(0)) t^{-1-sigma} dt,
/// for sigma in (0, 1). For sigma = 1 this is the number 2d of neighbours.
double total_mass(double sigma, int dimension, const QuadratureSpec& q = {});

/// kappa_alpha cached on the l-infinity box of a given radius, one value per
/// orbit of the signed permutation group.
class KernelTable {
public:
    KernelTable(double alpha, int dimension, int radius, std::vector<double> values,
                std::optional<double> mass = std::nullopt);

    double alpha() const { return alpha_; }
    int dimension() const { return dimension_; }
    int radius() const { return radius_; }
    const std::optional<double>& total_mass() const { return mass_; }
    /// The total mass; throws DomainError when the table carries none.
    double mass() const;

    bool covers(const LatticePoint& x) const { return x.norm_inf() <= radius_; }
    /// kappa_alpha(x); throws CoverageError outside the box.
    double operator()(const LatticePoint& x) const;
    /// Unchecked lookup from raw coordinates (any signs and order).
    double lookup(std::span<const int> coords) const;

    /// Number of stored orbit representatives.
    std::size_t size() const { return values_.size(); }
    /// Orbit representatives (coordinates sorted decreasingly) with their values.
    std::vector<std::pair<LatticePoint, double>> entries() const;
    const std::vector<double>& raw_values() const { return values_; }

    /// Enumerates the representatives with nondecreasing absolute coordinates
    /// in storage order.
    static std::vector<std::vector<int>> representatives(int dimension, int radius);
    static std::uint64_t representative_count(int dimension, int radius);

private:
    std::size_t rank(std::span<const int> coords) const;

    double alpha_;
    int dimension_;
    int radius_;
    std::vector<double> values_;
    std::optional<double> mass_;
    std::vector<std::uint64_t> binom_;  // binom_[n * (d + 1) + k]
};

/// Tables for several exponents on the same box, sharing the heat-kernel
/// evaluations. Tables for alpha in (0, 1] carry their total mass.
std::vector<KernelTable> build_tables(std::span<const double> alphas, int dimension, int radius,
                                      const QuadratureSpec& q = {});

KernelTable build_table(double alpha, int dimension, int radius, const QuadratureSpec& q = {});

} // namespace frachardy
