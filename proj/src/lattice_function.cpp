#include "frachardy/lattice_function.hpp"

#include "frachardy/errors.hpp"

#include <random>

namespace frachardy {

LatticeFunction::LatticeFunction(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw DomainError("LatticeFunction: dimension must be at least 1");
}

LatticeFunction LatticeFunction::delta(const LatticePoint& x) {
    LatticeFunction f(x.dimension());
    f.set(x, 1.0);
    return f;
}

LatticeFunction LatticeFunction::random_box(int dimension, int radius, std::uint64_t seed) {
    if (radius < 0) throw DomainError("LatticeFunction::random_box: radius must be nonnegative");
    LatticeFunction f(dimension);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<int> c(static_cast<std::size_t>(dimension), -radius);
    while (true) {
        f.set(LatticePoint(c), u(rng));
        int i = dimension - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == radius) c[static_cast<std::size_t>(i--)] = -radius;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return f;
}

void LatticeFunction::check(const LatticePoint& x) const {
    if (x.dimension() != dimension_)
        throw DomainError("LatticeFunction: point " + x.to_string() + " has the wrong dimension");
}

double LatticeFunction::operator()(const LatticePoint& x) const {
    check(x);
    const auto it = values_.find(x);
    return it == values_.end() ? 0.0 : it->second;
}

void LatticeFunction::set(const LatticePoint& x, double value) {
    check(x);
    if (value == 0.0)
        values_.erase(x);
    else
        values_[x] = value;
}

void LatticeFunction::add(const LatticePoint& x, double value) { set(x, (*this)(x) + value); }

int LatticeFunction::support_radius() const {
    int r = 0;
    for (const auto& [x, v] : values_) r = std::max(r, x.norm_inf());
    return r;
}

double LatticeFunction::sum_of_squares() const {
    double s = 0.0;
    for (const auto& [x, v] : values_) s += v * v;
    return s;
}

LatticeFunction& LatticeFunction::operator*=(double c) {
    if (c == 0.0) {
        values_.clear();
        return *this;
    }
    for (auto& [x, v] : values_) v *= c;
    return *this;
}

LatticeFunction operator+(const LatticeFunction& a, const LatticeFunction& b) {
    if (a.dimension() != b.dimension()) throw DomainError("LatticeFunction: dimension mismatch in sum");
    LatticeFunction out = a;
    for (const auto& [x, v] : b.entries()) out.add(x, v);
    return out;
}

BoxFunction::BoxFunction(int dimension, int radius) : dimension_(dimension), radius_(radius) {
    if (dimension < 1) throw DomainError("BoxFunction: dimension must be at least 1");
    if (radius < 0) throw DomainError("BoxFunction: radius must be nonnegative");
    std::size_t n = 1;
    for (int i = 0; i < dimension; ++i) n *= static_cast<std::size_t>(side());
    values_.assign(n, 0.0);
}

BoxFunction BoxFunction::from(const LatticeFunction& f, int radius) {
    BoxFunction b(f.dimension(), radius);
    for (const auto& [x, v] : f.entries()) {
        if (x.norm_inf() > radius)
            throw CoverageError("BoxFunction: support point " + x.to_string() + " lies outside the box");
        b.values_[b.index(x.coords())] = v;
    }
    return b;
}

std::size_t BoxFunction::index(std::span<const int> coords) const {
    std::size_t i = 0;
    for (int c : coords) i = i * static_cast<std::size_t>(side()) + static_cast<std::size_t>(c + radius_);
    return i;
}

void BoxFunction::coords(std::size_t index, std::span<int> out) const {
    const auto s = static_cast<std::size_t>(side());
    for (int k = dimension_ - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(index % s) - radius_;
        index /= s;
    }
}

LatticeFunction BoxFunction::to_lattice_function() const {
    LatticeFunction f(dimension_);
    std::vector<int> c(static_cast<std::size_t>(dimension_));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0.0) continue;
        coords(i, c);
        f.set(LatticePoint(c), values_[i]);
    }
    return f;
}

} // namespace frachardy
