#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace frachardy {

/// A point of Z^d.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> coords);
    LatticePoint(std::initializer_list<int> coords);

    /// The origin of Z^d.
    static LatticePoint zero(int dimension);
    /// r e_1 = (r, 0, ..., 0).
    static LatticePoint axis(int dimension, int r);

    int dimension() const { return static_cast<int>(coords_.size()); }
    int operator[](std::size_t i) const { return coords_[i]; }
    std::span<const int> coords() const { return coords_; }

    bool is_zero() const;
    double norm() const;          ///< Euclidean norm |x|
    long long norm_squared() const;
    int norm_inf() const;         ///< max norm |x|_inf
    long long norm_1() const;

    /// Canonical representative of the hyperoctahedral orbit: absolute values
    /// sorted in decreasing order.
    LatticePoint orbit_key() const;

    /// Number of points in the orbit of this point under signed permutations.
    long long orbit_size() const;

    LatticePoint operator-() const;
    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

    std::string to_string() const;

private:
    std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& x);

/// Dimension d and fractional power sigma of the operator.
///
/// Valid parameters satisfy d >= 1, sigma in (0, 1] and, for d in {1, 2},
/// sigma < d/2 so that the operator is transient.
class ModelParams {
public:
    ModelParams(int dimension, double sigma);

    int dimension() const { return dimension_; }
    double sigma() const { return sigma_; }
    /// Threshold (d/2 + sigma)/2 separating the criticality regimes.
    double alpha0() const { return (0.5 * dimension_ + sigma_) / 2.0; }
    double half_dimension() const { return 0.5 * dimension_; }

    /// Throws DomainError unless the parameters are admissible.
    static void validate(int dimension, double sigma);

private:
    int dimension_;
    double sigma_;
};

} // namespace frachardy
