#include "frachardy/lattice.hpp"

#include "frachardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace frachardy {

LatticePoint::LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("LatticePoint: dimension must be at least 1");
}

LatticePoint::LatticePoint(std::initializer_list<int> coords) : LatticePoint(std::vector<int>(coords)) {}

LatticePoint LatticePoint::zero(int dimension) {
    if (dimension < 1) throw DomainError("LatticePoint: dimension must be at least 1");
    return LatticePoint(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

LatticePoint LatticePoint::axis(int dimension, int r) {
    auto p = zero(dimension);
    p.coords_[0] = r;
    return p;
}

bool LatticePoint::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

long long LatticePoint::norm_squared() const {
    long long s = 0;
    for (int c : coords_) s += static_cast<long long>(c) * c;
    return s;
}

double LatticePoint::norm() const { return std::sqrt(static_cast<double>(norm_squared())); }

int LatticePoint::norm_inf() const {
    int m = 0;
    for (int c : coords_) m = std::max(m, std::abs(c));
    return m;
}

long long LatticePoint::norm_1() const {
    long long s = 0;
    for (int c : coords_) s += std::abs(c);
    return s;
}

LatticePoint LatticePoint::orbit_key() const {
    std::vector<int> k(coords_.size());
    std::transform(coords_.begin(), coords_.end(), k.begin(), [](int c) { return std::abs(c); });
    std::sort(k.begin(), k.end(), std::greater<>());
    return LatticePoint(std::move(k));
}

long long LatticePoint::orbit_size() const {
    const auto key = orbit_key();
    long long size = 1;
    // d! / prod(multiplicity!) * 2^{#nonzero}
    const int d = dimension();
    for (int i = 2; i <= d; ++i) size *= i;
    int run = 1;
    for (int i = 1; i <= d; ++i) {
        if (i < d && key[static_cast<std::size_t>(i)] == key[static_cast<std::size_t>(i - 1)]) {
            ++run;
        } else {
            for (int j = 2; j <= run; ++j) size /= j;
            run = 1;
        }
    }
    for (int c : key.coords_)
        if (c != 0) size *= 2;
    return size;
}

LatticePoint LatticePoint::operator-() const {
    std::vector<int> k(coords_);
    for (int& c : k) c = -c;
    return LatticePoint(std::move(k));
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    if (a.dimension() != b.dimension()) throw DomainError("LatticePoint: dimension mismatch in sum");
    std::vector<int> k(a.coords_);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += b.coords_[i];
    return LatticePoint(std::move(k));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    if (a.dimension() != b.dimension()) throw DomainError("LatticePoint: dimension mismatch in difference");
    std::vector<int> k(a.coords_);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] -= b.coords_[i];
    return LatticePoint(std::move(k));
}

std::string LatticePoint::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& x) {
    os << '(';
    for (int i = 0; i < x.dimension(); ++i) {
        if (i) os << ',';
        os << x[static_cast<std::size_t>(i)];
    }
    if (x.dimension() == 1) os << ',';
    return os << ')';
}

void ModelParams::validate(int dimension, double sigma) {
    if (dimension < 1) throw DomainError("ModelParams: dimension must be at least 1");
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("ModelParams: sigma must lie in (0, 1]");
    if (dimension <= 2 && !(sigma < 0.5 * dimension))
        throw DomainError("ModelParams: sigma must be below d/2 for d in {1, 2}");
}

ModelParams::ModelParams(int dimension, double sigma) : dimension_(dimension), sigma_(sigma) {
    validate(dimension, sigma);
}

} // namespace frachardy
