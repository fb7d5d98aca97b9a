#pragma once

#include "frachardy/lattice.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace frachardy {

/// Finitely supported real function on Z^d. Zero values are not stored.
class LatticeFunction {
public:
    explicit LatticeFunction(int dimension);

    /// The indicator of a single point.
    static LatticeFunction delta(const LatticePoint& x);

    /// I.i.d. uniform values on [-1, 1] over the l-infinity box of the given
    /// radius, from a seeded 64-bit Mersenne twister.
    static LatticeFunction random_box(int dimension, int radius, std::uint64_t seed);

    int dimension() const { return dimension_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double operator()(const LatticePoint& x) const;
    void set(const LatticePoint& x, double value);
    void add(const LatticePoint& x, double value);

    const std::map<LatticePoint, double>& entries() const { return values_; }

    /// Largest |x|_inf over the support, 0 when empty.
    int support_radius() const;
    double sum_of_squares() const;

    LatticeFunction& operator*=(double c);
    friend LatticeFunction operator*(double c, LatticeFunction f) { return f *= c; }
    friend LatticeFunction operator+(const LatticeFunction& a, const LatticeFunction& b);

private:
    void check(const LatticePoint& x) const;

    int dimension_;
    std::map<LatticePoint, double> values_;
};

/// Dense values on the box [-R, R]^d, last coordinate varying fastest.
class BoxFunction {
public:
    BoxFunction(int dimension, int radius);
    /// The restriction of f to the box; throws CoverageError if f has
    /// support outside it.
    static BoxFunction from(const LatticeFunction& f, int radius);

    int dimension() const { return dimension_; }
    int radius() const { return radius_; }
    int side() const { return 2 * radius_ + 1; }
    std::size_t size() const { return values_.size(); }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    std::size_t index(std::span<const int> coords) const;
    /// Coordinates of the entry at a flat index.
    void coords(std::size_t index, std::span<int> out) const;
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    LatticeFunction to_lattice_function() const;

private:
    int dimension_;
    int radius_;
    std::vector<double> values_;
};

} // namespace frachardy
