#include "frachardy/riesz_kernel.hpp"

#include "frachardy/errors.hpp"
#include "frachardy/heat_kernel.hpp"
#include "frachardy/special_functions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>
#include <thread>

namespace frachardy {

// ---------------------------------------------------------------------------
// QuadratureSpec

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 10) throw DomainError("QuadratureSpec: max_subdivisions must be at least 10");
    if (!(head_end > 0.0)) throw DomainError("QuadratureSpec: head_end must be positive");
    if (!(tail_factor >= 1.0) || !(tail_floor > head_end))
        throw DomainError("QuadratureSpec: tail must start beyond the head and at least |x|^2");
    if (!(panel_width > 0.0 && panel_width <= 2.0)) throw DomainError("QuadratureSpec: panel_width must lie in (0, 2]");
}

QuadratureSpec QuadratureSpec::from_environment() {
    QuadratureSpec q;
    if (const char* env = std::getenv("FRACHARDY_REL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw DomainError(std::string("FRACHARDY_REL_TOL is not a positive number: ") + env);
        q.rel_tol = v;
    }
    return q;
}

namespace {

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15 rule on [-1, 1].

constexpr std::array<double, 15> kGkNodes = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144845693013,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
constexpr std::array<double, 15> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
constexpr std::array<double, 15> kGaussWeights = {
    0.0, 0.129484966168869693270611432679082, 0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975, 0.0, 0.417959183673469387755102040816327,
    0.0, 0.381830050505118944950369775488975, 0.0, 0.279705391489276667901467771423780,
    0.0, 0.129484966168869693270611432679082, 0.0,
};

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha, int d, const char* op) {
    if (d < 1) throw DomainError(std::string(op) + ": dimension must be at least 1");
    if (!(alpha > -0.5 * d && alpha <= 1.0))
        throw DomainError(std::string(op) + ": alpha must lie in (-d/2, 1], got " + std::to_string(alpha));
}

std::vector<int> abs_sorted(std::span<const int> coords) {
    std::vector<int> a(coords.size());
    std::transform(coords.begin(), coords.end(), a.begin(), [](int c) { return std::abs(c); });
    std::sort(a.begin(), a.end());
    return a;
}

// Power series coefficients of prod_i e^{2t} p_t(m_i) = prod_i I_{m_i}(2t),
// i.e. of prod_i sum_k t^{2k + m_i} / (k! (k + m_i)!), starting at degree
// sum m_i. Returns terms up to `extra` beyond the leading degree.
std::vector<double> bessel_product_series(std::span<const int> abs_coords, int extra) {
    std::vector<double> acc(static_cast<std::size_t>(extra) + 1, 0.0);
    acc[0] = 1.0;
    std::vector<double> factor(acc.size());
    std::vector<double> next(acc.size());
    for (int m : abs_coords) {
        std::fill(factor.begin(), factor.end(), 0.0);
        double c = std::exp(-ln_gamma(m + 1.0));
        for (int k = 0; 2 * k <= extra; ++k) {
            factor[static_cast<std::size_t>(2 * k)] = c;
            c /= (k + 1.0) * (k + 1.0 + m);
        }
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < acc.size(); j += 2) next[i + j] += acc[i] * factor[j];
        }
        acc.swap(next);
    }
    return acc;
}

constexpr int kHeadTerms = 60;

// int_0^h e^{-eps t} p_t(x) t^{-1-power} dt from the power series of p_t.
double head_kernel(std::span<const int> abs_coords, double power, double h, double eps) {
    const int d = static_cast<int>(abs_coords.size());
    long long n0 = 0;
    for (int m : abs_coords) n0 += m;
    const auto q = bessel_product_series(abs_coords, kHeadTerms);
    const double rate = (2.0 * d + eps) * h;
    double sum = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0.0) continue;
        const double a = static_cast<double>(n0) + static_cast<double>(j) - power;
        const double term = q[j] * std::pow(h, a) * lower_gamma_scaled(a, rate);
        sum += term;
        if (j > 8 && term < 1e-18 * sum) break;
    }
    return sum;
}

// int_0^h (1 - p_t(0)) t^{-1-sigma} dt for sigma in (0, 1).
double head_mass(int d, double sigma, double h) {
    const double c = 2.0 * d;
    const double decay = -std::expm1(-c * h);
    double value = -decay * std::pow(h, -sigma) / sigma +
                   (c / sigma) * std::pow(h, 1.0 - sigma) * lower_gamma_scaled(1.0 - sigma, c * h);
    std::vector<int> zeros(static_cast<std::size_t>(d), 0);
    const auto q = bessel_product_series(zeros, kHeadTerms);
    for (std::size_t j = 1; j < q.size(); ++j) {
        if (q[j] == 0.0) continue;
        const double a = static_cast<double>(j) - sigma;
        const double term = q[j] * std::pow(h, a) * lower_gamma_scaled(a, c * h);
        value -= term;
        if (j > 8 && term < 1e-18 * std::abs(value)) break;
    }
    return value;
}

// Upper bound on head_kernel for x != 0 from p_t(x) <= t^m / m!, m = |x|_inf.
double head_bound(std::span<const int> abs_sorted_coords, double power, double h) {
    const int m = abs_sorted_coords.back();
    return std::exp(m * std::log(h) - power * std::log(h) - ln_gamma(m + 1.0)) / (m - power);
}

// Large-time expansion e^{-z} I_m(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(m) z^{-k}
// with z = 2t, so the 1-D factor is (4 pi t)^{-1/2} sum_k c_k(m) t^{-k} with
// c_k = c_{k-1} ((2k-1)^2 - 4 m^2) / (16 k).
struct TailResult {
    double value;
    double truncation;  // magnitude of the first neglected term
};

constexpr int kTailMaxTerms = 48;

TailResult tail_kernel(std::span<const int> abs_coords, double power, double T, bool leading_only) {
    const int d = static_cast<int>(abs_coords.size());
    const double hd = 0.5 * d;
    const double scale = std::pow(4.0 * kPi, -hd);
    auto term_integral = [&](int n, double coeff) {
        const double e = hd + n + power;
        return coeff * scale * std::exp(-e * std::log(T)) / e;
    };
    if (leading_only) {
        double b1 = 0.0;
        for (int m : abs_coords) b1 += (1.0 - 4.0 * static_cast<double>(m) * m) / 16.0;
        return {term_integral(0, 1.0), std::abs(term_integral(1, b1))};
    }
    // product of the per-coordinate series in u = 1/T units
    std::array<double, kTailMaxTerms> acc{};
    acc[0] = 1.0;
    // one factor per coordinate, each cut where it is negligible or starts to grow
    std::vector<std::array<double, kTailMaxTerms>> factors;
    int used = 1;
    for (int m : abs_coords) {
        const double four_m2 = 4.0 * static_cast<double>(m) * m;
        auto& f = factors.emplace_back();
        f[0] = 1.0;
        int len = kTailMaxTerms;
        for (int k = 1; k < kTailMaxTerms; ++k) {
            const double odd = 2.0 * k - 1.0;
            f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k - 1)] * (odd * odd - four_m2) / (16.0 * k * T);
            const double mag = std::abs(f[static_cast<std::size_t>(k)]);
            if (mag < 1e-20 || (k > 2 && mag > std::abs(f[static_cast<std::size_t>(k - 1)]))) {
                len = k + 1;
                break;
            }
        }
        used = std::max(used, len);
    }
    std::array<double, kTailMaxTerms> next{};
    for (const auto& f : factors) {
        next.fill(0.0);
        for (int i = 0; i < used; ++i) {
            const double a = acc[static_cast<std::size_t>(i)];
            if (a == 0.0) continue;
            for (int j = 0; i + j < used; ++j) next[static_cast<std::size_t>(i + j)] += a * f[static_cast<std::size_t>(j)];
        }
        acc = next;
    }
    // acc[n] now holds b_n T^{-n}; integrate b_n t^{-d/2-n-1-power} over [T, inf)
    double sum = 0.0;
    double last = 0.0;
    for (int n = 0; n < used; ++n) {
        const double e = hd + n + power;
        const double term = acc[static_cast<std::size_t>(n)] * scale * std::exp(-(hd + power) * std::log(T)) / e;
        sum += term;
        last = std::abs(term);
        if (n > 2 && last < 1e-18 * std::abs(sum)) break;
        // terms of an asymptotic series eventually grow; stop at the smallest
        if (n > 2 && std::abs(acc[static_cast<std::size_t>(n)]) > std::abs(acc[static_cast<std::size_t>(n - 1)])) break;
    }
    return {sum, last};
}

double tail_start(long long norm_sq, const QuadratureSpec& q) {
    return std::max(q.tail_floor, q.tail_factor * static_cast<double>(norm_sq));
}

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

// Gauss-Kronrod panel in s = log t of f(s) = g(e^s) e^{-power s}.
template <class G>
Panel gk_panel(G& g, double power, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k = 0.0;
    double gs = 0.0;
    for (std::size_t i = 0; i < kGkNodes.size(); ++i) {
        const double s = mid + half * kGkNodes[i];
        const double f = g(std::exp(s)) * std::exp(-power * s);
        k += kKronrodWeights[i] * f;
        gs += kGaussWeights[i] * f;
    }
    return {a, b, k * half, std::abs(k - gs) * half};
}

struct PanelOrder {
    bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

// Adaptive body integral over [log h, log T]; `budget(value)` gives the
// allowed error for the current total estimate.
template <class G, class Budget>
double body_adaptive(G& g, double power, double s0, double s1, const QuadratureSpec& q, Budget budget,
                     const char* what) {
    const int n0 = std::max(1, static_cast<int>(std::ceil((s1 - s0) / q.panel_width)));
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    double total = 0.0;
    double error = 0.0;
    for (int i = 0; i < n0; ++i) {
        const double a = s0 + (s1 - s0) * i / n0;
        const double b = s0 + (s1 - s0) * (i + 1) / n0;
        Panel p = gk_panel(g, power, a, b);
        total += p.value;
        error += p.error;
        heap.push(p);
    }
    int subdivisions = 0;
    while (error > budget(total)) {
        if (subdivisions >= q.max_subdivisions) {
            char est[32];
            std::snprintf(est, sizeof est, "%.3g", error);
            throw QuadratureError(std::string(what) + ": tolerance not met after " + std::to_string(subdivisions) +
                                  " subdivisions (error estimate " + est + ")");
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk_panel(g, power, worst.a, mid);
        Panel right = gk_panel(g, power, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    return total;
}

// Raw integral int_0^inf e^{-eps t} p_t(x) t^{-1-power} dt for one point.
double kernel_time_integral(std::span<const int> coords, double power, double eps, const QuadratureSpec& q,
                            double norm_factor) {
    const auto a = abs_sorted(coords);
    const int max_m = a.back();
    long long norm_sq = 0;
    for (int m : a) norm_sq += static_cast<long long>(m) * m;
    const bool origin = max_m == 0;
    const double h = q.head_end;

    double T = tail_start(norm_sq, q);
    double tail = 0.0;
    double tail_err = 0.0;
    const bool leading_only = q.tail_policy == TailPolicy::PowerLawBound;
    if (eps > 0.0) {
        // the damped integrand is negligible beyond e^{-eps t} < e^{-40}
        T = std::max(T, 40.0 / eps);
    } else {
        auto tr = tail_kernel(a, power, T, leading_only);
        if (leading_only) {
            // push the tail out until the neglected correction fits the budget
            while (tr.truncation > q.rel_tol / 3.0 * std::abs(tr.value) && T < 1e14) {
                T *= 4.0;
                tr = tail_kernel(a, power, T, true);
            }
        }
        tail = tr.value;
        tail_err = tr.truncation;
    }

    auto g = [&](double t) {
        const auto prof = heat_kernel_1d_profile(t, max_m);
        double p = 1.0;
        for (int m : a) p *= prof[static_cast<std::size_t>(m)];
        return eps > 0.0 ? p * std::exp(-eps * t) : p;
    };

    double head = 0.0;
    const bool head_needed = origin || head_bound(a, power, h) > 1e-3 * q.abs_tol * norm_factor;
    if (head_needed) head = head_kernel(a, power, h, eps);

    auto budget = [&](double body) {
        const double total = std::abs(head + body + tail);
        return std::max(q.rel_tol * total, q.abs_tol * norm_factor) / 3.0;
    };
    const double body = body_adaptive(g, power, std::log(h), std::log(T), q, budget, "riesz");
    const double total = head + body + tail;
    if (tail_err > std::max(q.rel_tol * std::abs(total), q.abs_tol * norm_factor) / 3.0)
        throw QuadratureError("riesz: tail expansion did not converge to the requested tolerance");
    if (!head_needed) {
        // the neglected head must also fit its share of the budget
        const double bound = head_bound(a, power, h);
        if (bound > std::max(q.rel_tol * std::abs(total), q.abs_tol * norm_factor) / 3.0)
            return total + head_kernel(a, power, h, eps);
    }
    return total;
}

double riesz_impl(double alpha, const LatticePoint& x, double eps, const QuadratureSpec& q) {
    q.validate();
    const int d = x.dimension();
    check_alpha(alpha, d, "riesz");
    if (alpha == 0.0) return x.is_zero() ? 1.0 : 0.0;
    if (alpha == 1.0) return x.norm_1() == 1 ? 1.0 : 0.0;
    if (alpha > 0.0 && x.is_zero()) return 0.0;
    const double norm = abs_gamma_neg(alpha);
    return kernel_time_integral(x.coords(), alpha, eps, q, norm) / norm;
}

} // namespace

double riesz(double alpha, const LatticePoint& x, const QuadratureSpec& q) { return riesz_impl(alpha, x, 0.0, q); }

double riesz_regularized(double alpha, const LatticePoint& x, double eps, const QuadratureSpec& q) {
    if (!(eps > 0.0)) throw DomainError("riesz_regularized: eps must be positive");
    return riesz_impl(alpha, x, eps, q);
}

double riesz_asymptotic_constant(double alpha, int dimension) {
    check_alpha(alpha, dimension, "riesz_asymptotic_constant");
    if (alpha == 0.0 || alpha == 1.0)
        throw DomainError("riesz_asymptotic_constant: alpha must differ from 0 and 1");
    const double hd = 0.5 * dimension;
    return std::pow(4.0, alpha) * gamma(hd + alpha) / (std::pow(kPi, hd) * abs_gamma_neg(alpha));
}

double riesz_asymptotic(double alpha, const LatticePoint& x) {
    if (x.is_zero()) throw DomainError("riesz_asymptotic: x must be nonzero");
    const int d = x.dimension();
    return riesz_asymptotic_constant(alpha, d) * std::pow(x.norm(), -d - 2.0 * alpha);
}

double total_mass(double sigma, int dimension, const QuadratureSpec& q) {
    q.validate();
    if (dimension < 1) throw DomainError("total_mass: dimension must be at least 1");
    if (sigma == 1.0) return 2.0 * dimension;
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("total_mass: sigma must lie in (0, 1]");
    const double h = q.head_end;
    const double T = q.tail_floor;
    const double head = head_mass(dimension, sigma, h);
    std::vector<int> origin(static_cast<std::size_t>(dimension), 0);
    const auto tr = tail_kernel(origin, sigma, T, false);
    const double tail = std::pow(T, -sigma) / sigma - tr.value;
    auto g = [&](double t) { return -std::expm1(dimension * std::log(bessel_i_scaled(0, 2.0 * t))); };
    const double norm = abs_gamma_neg(sigma);
    auto budget = [&](double body) {
        return std::max(q.rel_tol * std::abs(head + body + tail), q.abs_tol * norm) / 3.0;
    };
    const double body = body_adaptive(g, sigma, std::log(h), std::log(T), q, budget, "total_mass");
    return (head + body + tail) / norm;
}

// ---------------------------------------------------------------------------
// KernelTable

namespace {

std::vector<std::uint64_t> binomial_table(int dimension, int radius) {
    const int n_max = radius + dimension;
    const auto stride = static_cast<std::size_t>(dimension + 1);
    std::vector<std::uint64_t> b(static_cast<std::size_t>(n_max + 1) * stride, 0);
    for (int n = 0; n <= n_max; ++n) {
        b[static_cast<std::size_t>(n) * stride] = 1;
        for (int k = 1; k <= std::min(n, dimension); ++k) {
            const std::uint64_t left = b[static_cast<std::size_t>(n - 1) * stride + static_cast<std::size_t>(k - 1)];
            const std::uint64_t right = k <= n - 1 ? b[static_cast<std::size_t>(n - 1) * stride + static_cast<std::size_t>(k)] : 0;
            b[static_cast<std::size_t>(n) * stride + static_cast<std::size_t>(k)] = left + right;
        }
    }
    return b;
}

constexpr int kMaxTableDimension = 16;

} // namespace

std::uint64_t KernelTable::representative_count(int dimension, int radius) {
    if (dimension < 1 || dimension > kMaxTableDimension) throw DomainError("KernelTable: unsupported dimension");
    if (radius < 0) throw DomainError("KernelTable: radius must be nonnegative");
    const auto b = binomial_table(dimension, radius);
    return b[static_cast<std::size_t>(radius + dimension) * static_cast<std::size_t>(dimension + 1) +
             static_cast<std::size_t>(dimension)];
}

std::vector<std::vector<int>> KernelTable::representatives(int dimension, int radius) {
    const auto count = representative_count(dimension, radius);
    std::vector<std::vector<int>> reps;
    reps.reserve(count);
    std::vector<int> cur(static_cast<std::size_t>(dimension), 0);
    // odometer over nondecreasing tuples in colexicographic order, which is
    // the order of the combinatorial number system used by rank()
    while (true) {
        reps.push_back(cur);
        int i = 0;
        // find the first coordinate that can grow without exceeding the next one
        while (i < dimension) {
            const int cap = i + 1 < dimension ? cur[static_cast<std::size_t>(i + 1)] : radius;
            if (cur[static_cast<std::size_t>(i)] < cap) break;
            ++i;
        }
        if (i == dimension) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = 0;
    }
    return reps;
}

KernelTable::KernelTable(double alpha, int dimension, int radius, std::vector<double> values,
                         std::optional<double> mass)
    : alpha_(alpha), dimension_(dimension), radius_(radius), values_(std::move(values)), mass_(mass),
      binom_(binomial_table(dimension, radius)) {
    if (values_.size() != representative_count(dimension, radius))
        throw DomainError("KernelTable: value count does not match the box");
}

double KernelTable::mass() const {
    if (!mass_) throw DomainError("KernelTable: table for alpha = " + std::to_string(alpha_) + " carries no total mass");
    return *mass_;
}

std::size_t KernelTable::rank(std::span<const int> coords) const {
    std::array<int, kMaxTableDimension> a{};
    const auto d = coords.size();
    for (std::size_t i = 0; i < d; ++i) a[i] = std::abs(coords[i]);
    std::sort(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(d));
    std::size_t r = 0;
    const auto stride = static_cast<std::size_t>(dimension_ + 1);
    for (std::size_t i = 0; i < d; ++i) {
        const auto c = static_cast<std::size_t>(a[i]) + i;  // strictly increasing
        r += binom_[c * stride + i + 1];
    }
    return r;
}

double KernelTable::lookup(std::span<const int> coords) const { return values_[rank(coords)]; }

double KernelTable::operator()(const LatticePoint& x) const {
    if (x.dimension() != dimension_) throw DomainError("KernelTable: dimension mismatch");
    if (!covers(x))
        throw CoverageError("KernelTable(alpha=" + std::to_string(alpha_) + ", radius=" + std::to_string(radius_) +
                            "): point " + x.to_string() + " lies outside the box");
    return lookup(x.coords());
}

std::vector<std::pair<LatticePoint, double>> KernelTable::entries() const {
    std::vector<std::pair<LatticePoint, double>> out;
    out.reserve(values_.size());
    for (auto& rep : representatives(dimension_, radius_)) {
        const double v = lookup(rep);
        std::reverse(rep.begin(), rep.end());
        out.emplace_back(LatticePoint(std::move(rep)), v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Batch evaluation for tables

namespace {

unsigned worker_count(std::size_t jobs) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(1, jobs)));
}

template <class F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers = worker_count(n / 64 + 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) f(i);
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

struct BodyGrid {
    std::vector<double> s;                   // node positions in log t
    std::vector<std::vector<double>> profile;  // p_t(m), m = 0..max_m, per node
    int panels = 0;
};

BodyGrid make_grid(double s0, double s1, int panels, int max_m) {
    BodyGrid g;
    g.panels = panels;
    g.s.resize(static_cast<std::size_t>(panels) * kGkNodes.size());
    for (int p = 0; p < panels; ++p) {
        const double a = s0 + (s1 - s0) * p / panels;
        const double b = s0 + (s1 - s0) * (p + 1) / panels;
        for (std::size_t i = 0; i < kGkNodes.size(); ++i)
            g.s[static_cast<std::size_t>(p) * kGkNodes.size() + i] = 0.5 * (a + b) + 0.5 * (b - a) * kGkNodes[i];
    }
    g.profile.resize(g.s.size());
    parallel_for(g.s.size(), [&](std::size_t k) { g.profile[k] = heat_kernel_1d_profile(std::exp(g.s[k]), max_m); });
    return g;
}

} // namespace

std::vector<KernelTable> build_tables(std::span<const double> alphas, int dimension, int radius,
                                      const QuadratureSpec& q) {
    q.validate();
    if (radius < 1) throw DomainError("build_table: radius must be at least 1");
    for (double a : alphas) check_alpha(a, dimension, "build_table");

    const auto reps = KernelTable::representatives(dimension, radius);
    const std::size_t n_pts = reps.size();
    const std::size_t n_alpha = alphas.size();
    std::vector<std::vector<double>> values(n_alpha, std::vector<double>(n_pts, 0.0));

    // exponents that need quadrature
    std::vector<std::size_t> integrated;
    for (std::size_t j = 0; j < n_alpha; ++j) {
        const double a = alphas[j];
        if (a == 0.0 || a == 1.0) {
            for (std::size_t i = 0; i < n_pts; ++i) {
                long long l1 = 0;
                for (int c : reps[i]) l1 += c;
                values[j][i] = (a == 0.0) ? (l1 == 0 ? 1.0 : 0.0) : (l1 == 1 ? 1.0 : 0.0);
            }
        } else {
            integrated.push_back(j);
        }
    }

    if (!integrated.empty()) {
        const long long max_norm_sq = static_cast<long long>(dimension) * radius * radius;
        const double h = q.head_end;
        double T = tail_start(max_norm_sq, q);
        const bool leading_only = q.tail_policy == TailPolicy::PowerLawBound;
        if (leading_only) {
            // widest tail start needed by any exponent at the origin-most point
            for (std::size_t j : integrated) {
                std::vector<int> probe(static_cast<std::size_t>(dimension), radius);
                auto tr = tail_kernel(probe, alphas[j], T, true);
                while (tr.truncation > q.rel_tol / 3.0 * std::abs(tr.value) && T < 1e14) {
                    T *= 4.0;
                    tr = tail_kernel(probe, alphas[j], T, true);
                }
            }
        }
        const double s0 = std::log(h);
        const double s1 = std::log(T);
        std::vector<double> norms(n_alpha, 1.0);
        for (std::size_t j : integrated) norms[j] = abs_gamma_neg(alphas[j]);

        // points still needing a body integral, per exponent
        std::vector<std::vector<std::size_t>> pending(n_alpha);
        for (std::size_t j : integrated) {
            for (std::size_t i = 0; i < n_pts; ++i) {
                const bool origin = reps[i].back() == 0;
                if (origin && alphas[j] > 0.0) continue;  // kappa_alpha(0) = 0
                pending[j].push_back(i);
            }
        }
        // head and tail once per point
        std::vector<std::vector<double>> head(n_alpha), tail(n_alpha), tail_err(n_alpha);
        for (std::size_t j : integrated) {
            head[j].assign(n_pts, 0.0);
            tail[j].assign(n_pts, 0.0);
            tail_err[j].assign(n_pts, 0.0);
            parallel_for(pending[j].size(), [&](std::size_t k) {
                const std::size_t i = pending[j][k];
                const auto& a = reps[i];
                const bool origin = a.back() == 0;
                if (origin || head_bound(a, alphas[j], h) > 1e-3 * q.abs_tol * norms[j])
                    head[j][i] = head_kernel(a, alphas[j], h, 0.0);
                const auto tr = tail_kernel(a, alphas[j], T, leading_only);
                tail[j][i] = tr.value;
                tail_err[j][i] = tr.truncation;
            });
        }

        int panels = std::max(1, static_cast<int>(std::ceil((s1 - s0) / q.panel_width)));
        const int max_levels = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(q.max_subdivisions))) - 1);
        for (int level = 0;; ++level) {
            bool any = false;
            for (std::size_t j : integrated) any = any || !pending[j].empty();
            if (!any) break;
            if (level > max_levels) {
                for (std::size_t j : integrated) {
                    if (!pending[j].empty()) {
                        auto bad = reps[pending[j].front()];
                        std::reverse(bad.begin(), bad.end());
                        throw QuadratureError("build_table(alpha=" + std::to_string(alphas[j]) +
                                              "): tolerance not met at " + LatticePoint(bad).to_string());
                    }
                }
            }
            const BodyGrid grid = make_grid(s0, s1, panels, radius);
            const std::size_t n_nodes = grid.s.size();
            const double half = 0.5 * (s1 - s0) / panels;
            // per-exponent node weights including e^{-alpha s}
            std::vector<std::vector<double>> wk(n_alpha), wg(n_alpha);
            for (std::size_t j : integrated) {
                wk[j].resize(n_nodes);
                wg[j].resize(n_nodes);
                for (std::size_t k = 0; k < n_nodes; ++k) {
                    const double damp = std::exp(-alphas[j] * grid.s[k]) * half;
                    wk[j][k] = kKronrodWeights[k % kGkNodes.size()] * damp;
                    wg[j][k] = kGaussWeights[k % kGkNodes.size()] * damp;
                }
            }
            // union of pending points
            std::vector<char> mark(n_pts, 0);
            for (std::size_t j : integrated)
                for (std::size_t i : pending[j]) mark[i] = 1;
            std::vector<std::size_t> work;
            for (std::size_t i = 0; i < n_pts; ++i)
                if (mark[i]) work.push_back(i);

            std::vector<std::vector<char>> failed(n_alpha, std::vector<char>(n_pts, 0));
            parallel_for(work.size(), [&](std::size_t w) {
                const std::size_t i = work[w];
                const auto& a = reps[i];
                std::vector<double> prod(n_nodes);
                for (std::size_t k = 0; k < n_nodes; ++k) {
                    double p = 1.0;
                    for (int m : a) p *= grid.profile[k][static_cast<std::size_t>(m)];
                    prod[k] = p;
                }
                for (std::size_t j : integrated) {
                    if (wk[j].empty()) continue;
                    if (a.back() == 0 && alphas[j] > 0.0) continue;
                    double body = 0.0;
                    double err = 0.0;
                    for (int p = 0; p < grid.panels; ++p) {
                        double kk = 0.0;
                        double gg = 0.0;
                        const std::size_t base = static_cast<std::size_t>(p) * kGkNodes.size();
                        for (std::size_t r = 0; r < kGkNodes.size(); ++r) {
                            kk += wk[j][base + r] * prod[base + r];
                            gg += wg[j][base + r] * prod[base + r];
                        }
                        body += kk;
                        err += std::abs(kk - gg);
                    }
                    const double total = head[j][i] + body + tail[j][i];
                    const double budget = std::max(q.rel_tol * std::abs(total), q.abs_tol * norms[j]) / 3.0;
                    if (tail_err[j][i] > budget)
                        throw QuadratureError("build_table: tail expansion did not converge");
                    values[j][i] = total / norms[j];
                    if (err > budget) failed[j][i] = 1;
                    if (head[j][i] == 0.0 && a.back() != 0 && head_bound(a, alphas[j], h) > budget)
                        values[j][i] = (total + head_kernel(a, alphas[j], h, 0.0)) / norms[j];
                }
            });
            for (std::size_t j : integrated) {
                std::vector<std::size_t> still;
                for (std::size_t i : pending[j])
                    if (failed[j][i]) still.push_back(i);
                pending[j] = std::move(still);
            }
            panels *= 2;
        }
    }

    std::vector<KernelTable> out;
    out.reserve(n_alpha);
    for (std::size_t j = 0; j < n_alpha; ++j) {
        std::optional<double> mass;
        if (alphas[j] > 0.0) mass = total_mass(alphas[j], dimension, q);
        out.emplace_back(alphas[j], dimension, radius, std::move(values[j]), mass);
    }
    return out;
}

KernelTable build_table(double alpha, int dimension, int radius, const QuadratureSpec& q) {
    const std::array<double, 1> a = {alpha};
    return std::move(build_tables(a, dimension, radius, q).front());
}

} // namespace frachardy
