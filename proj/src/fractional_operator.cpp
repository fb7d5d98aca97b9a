#include "frachardy/fractional_operator.hpp"

#include "frachardy/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>

namespace frachardy {

namespace {

void require_operator_table(const KernelTable& t, const char* op) {
    if (!(t.alpha() > 0.0 && t.alpha() <= 1.0))
        throw DomainError(std::string(op) + ": kernel table must be for sigma in (0, 1], got alpha = " +
                          std::to_string(t.alpha()));
    if (!t.total_mass()) throw DomainError(std::string(op) + ": kernel table carries no total mass");
}

void require_dimension(int a, int b, const char* op) {
    if (a != b) throw DomainError(std::string(op) + ": dimension mismatch");
}

std::vector<int> difference(std::span<const int> a, std::span<const int> b) {
    std::vector<int> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

int inf_norm(std::span<const int> v) {
    int m = 0;
    for (int c : v) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

double apply_frac_laplacian(const KernelTable& kappa_sigma, const LatticeFunction& f, const LatticePoint& x) {
    require_operator_table(kappa_sigma, "apply_frac_laplacian");
    require_dimension(kappa_sigma.dimension(), f.dimension(), "apply_frac_laplacian");
    require_dimension(x.dimension(), f.dimension(), "apply_frac_laplacian");
    double sum = 0.0;
    for (const auto& [y, v] : f.entries()) {
        const auto diff = difference(x.coords(), y.coords());
        if (inf_norm(diff) > kappa_sigma.radius())
            throw CoverageError("apply_frac_laplacian: x - y = " + (x - y).to_string() + " lies outside the table");
        sum += kappa_sigma.lookup(diff) * v;
    }
    return f(x) * kappa_sigma.mass() - sum;
}

double green_kernel(double sigma, const LatticePoint& x, const LatticePoint& y, const QuadratureSpec& q) {
    require_dimension(x.dimension(), y.dimension(), "green_kernel");
    ModelParams::validate(x.dimension(), sigma);
    return riesz(-sigma, x - y, q);
}

double green_apply(double sigma, const LatticeFunction& k, const LatticePoint& x, const QuadratureSpec& q) {
    require_dimension(x.dimension(), k.dimension(), "green_apply");
    ModelParams::validate(x.dimension(), sigma);
    double sum = 0.0;
    for (const auto& [y, v] : k.entries()) sum += riesz(-sigma, x - y, q) * v;
    return sum;
}

double quadratic_form(const KernelTable& kappa_sigma, const LatticeFunction& phi) {
    require_operator_table(kappa_sigma, "quadratic_form");
    require_dimension(kappa_sigma.dimension(), phi.dimension(), "quadratic_form");
    if (2 * phi.support_radius() > kappa_sigma.radius())
        throw CoverageError("quadratic_form: table radius " + std::to_string(kappa_sigma.radius()) +
                            " does not cover twice the support radius " + std::to_string(phi.support_radius()));
    std::vector<const LatticePoint*> pts;
    std::vector<double> val;
    for (const auto& [x, v] : phi.entries()) {
        pts.push_back(&x);
        val.push_back(v);
    }
    const double m = kappa_sigma.mass();
    const int d = phi.dimension();
    std::vector<int> diff(static_cast<std::size_t>(d));
    double pair = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            for (int k = 0; k < d; ++k)
                diff[static_cast<std::size_t>(k)] = (*pts[i])[static_cast<std::size_t>(k)] - (*pts[j])[static_cast<std::size_t>(k)];
            const double kap = kappa_sigma.lookup(diff);
            inner += kap;
            const double delta = val[i] - val[j];
            pair += kap * delta * delta;
        }
        diag += val[i] * val[i] * (m - inner);
    }
    return 0.5 * pair + diag;
}

namespace {

int fft_size(int minimum) {
    for (int n = minimum;; ++n) {
        int r = n;
        for (int p : {2, 3, 5, 7})
            while (r % p == 0) r /= p;
        if (r == 1) return n;
    }
}

// FFTW planning is not thread safe.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(double* p) const { fftw_free(p); }
};

} // namespace

double quadratic_form_box(const KernelTable& kappa_sigma, const BoxFunction& phi) {
    require_operator_table(kappa_sigma, "quadratic_form_box");
    require_dimension(kappa_sigma.dimension(), phi.dimension(), "quadratic_form_box");
    const int d = phi.dimension();
    const int R = phi.radius();
    if (kappa_sigma.radius() < 2 * R)
        throw CoverageError("quadratic_form_box: table radius " + std::to_string(kappa_sigma.radius()) +
                            " is below twice the box radius " + std::to_string(R));
    // periodic grid large enough that the kernel restricted to [-2R, 2R]^d
    // does not overlap its periodic images
    const int n = fft_size(4 * R + 1);
    const int half = n / 2 + 1;
    std::size_t outer = 1;
    for (int i = 0; i < d - 1; ++i) outer *= static_cast<std::size_t>(n);
    const std::size_t padded = outer * static_cast<std::size_t>(2 * half);  // in-place r2c layout
    const std::size_t spectrum = outer * static_cast<std::size_t>(half);

    std::unique_ptr<double, FftwFree> kbuf(fftw_alloc_real(padded));
    std::unique_ptr<double, FftwFree> pbuf(fftw_alloc_real(padded));
    if (!kbuf || !pbuf) throw Error("quadratic_form_box: FFT buffer allocation failed");
    std::fill_n(kbuf.get(), padded, 0.0);
    std::fill_n(pbuf.get(), padded, 0.0);

    std::vector<int> dims(static_cast<std::size_t>(d), n);
    fftw_plan kplan;
    fftw_plan pplan;
    {
        std::scoped_lock lock(fftw_planner_mutex());
        kplan = fftw_plan_dft_r2c(d, dims.data(), kbuf.get(), reinterpret_cast<fftw_complex*>(kbuf.get()), FFTW_ESTIMATE);
        pplan = fftw_plan_dft_r2c(d, dims.data(), pbuf.get(), reinterpret_cast<fftw_complex*>(pbuf.get()), FFTW_ESTIMATE);
    }

    auto flat = [&](std::span<const int> c) {
        std::size_t i = 0;
        for (int k = 0; k < d; ++k) {
            const int w = ((c[static_cast<std::size_t>(k)] % n) + n) % n;
            i = (k == d - 1) ? i * static_cast<std::size_t>(2 * half) + static_cast<std::size_t>(w)
                             : i * static_cast<std::size_t>(n) + static_cast<std::size_t>(w);
        }
        return i;
    };

    // kernel on [-2R, 2R]^d, wrapped
    std::vector<int> c(static_cast<std::size_t>(d), -2 * R);
    while (true) {
        kbuf.get()[flat(c)] = kappa_sigma.lookup(c);
        int k = d - 1;
        while (k >= 0 && c[static_cast<std::size_t>(k)] == 2 * R) c[static_cast<std::size_t>(k--)] = -2 * R;
        if (k < 0) break;
        ++c[static_cast<std::size_t>(k)];
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        phi.coords(i, c);
        pbuf.get()[flat(c)] = phi[i];
        norm2 += phi[i] * phi[i];
    }
    fftw_execute(kplan);
    fftw_execute(pplan);
    {
        std::scoped_lock lock(fftw_planner_mutex());
        fftw_destroy_plan(kplan);
        fftw_destroy_plan(pplan);
    }

    const auto* kh = reinterpret_cast<const fftw_complex*>(kbuf.get());
    const auto* ph = reinterpret_cast<const fftw_complex*>(pbuf.get());
    double conv = 0.0;
    for (std::size_t i = 0; i < spectrum; ++i) {
        const auto last = static_cast<int>(i % static_cast<std::size_t>(half));
        // the half spectrum stores each conjugate pair once
        const double weight = (last == 0 || (n % 2 == 0 && last == n / 2)) ? 1.0 : 2.0;
        conv += weight * kh[i][0] * (ph[i][0] * ph[i][0] + ph[i][1] * ph[i][1]);
    }
    double total = 1.0;
    for (int k = 0; k < d; ++k) total *= n;
    return kappa_sigma.mass() * norm2 - conv / total;
}

double cube_exterior_integral(int dimension, double p) {
    if (dimension < 1) throw DomainError("cube_exterior_integral: dimension must be at least 1");
    if (!(p > dimension)) throw DomainError("cube_exterior_integral: requires p > d");
    using boost::math::quadrature::gauss;
    // each face {u_i = +-s} contributes s^{d-1-p} ds times the integral of
    // (1 + |v|^2)^{-p/2} over v in [-1, 1]^{d-1}
    std::function<double(int, double)> face = [&](int left, double r2) -> double {
        if (left == 0) return std::pow(1.0 + r2, -0.5 * p);
        return gauss<double, 30>::integrate([&](double v) { return face(left - 1, r2 + v * v); }, -1.0, 1.0);
    };
    return 2.0 * dimension / (p - dimension) * face(dimension - 1, 0.0);
}

namespace {

// sum over R < |y|_inf <= far of C |x - y|^{-px} |y|^{-py}, plus the
// continuum integral of C |u|^{-(px + py)} over |u|_inf > far + 1/2.
double far_tail(const LatticePoint& x, int radius, int far, double constant, double px, double py) {
    const int d = x.dimension();
    double sum = 0.0;
    std::vector<int> y(static_cast<std::size_t>(d), -far);
    if (d == 1) {
        for (int s : {-1, 1})
            for (int r = radius + 1; r <= far; ++r) {
                const double yy = s * r;
                sum += std::pow(std::abs(x[0] - yy), -px) * std::pow(static_cast<double>(r), -py);
            }
    } else {
        while (true) {
            if (inf_norm(y) > radius) {
                double dx = 0.0;
                double dy = 0.0;
                for (int k = 0; k < d; ++k) {
                    const double a = x[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(k)];
                    dx += a * a;
                    dy += static_cast<double>(y[static_cast<std::size_t>(k)]) * y[static_cast<std::size_t>(k)];
                }
                sum += std::pow(dx, -0.5 * px) * std::pow(dy, -0.5 * py);
            }
            int k = d - 1;
            while (k >= 0 && y[static_cast<std::size_t>(k)] == far) y[static_cast<std::size_t>(k--)] = -far;
            if (k < 0) break;
            ++y[static_cast<std::size_t>(k)];
        }
    }
    const double p = px + py;
    const double beyond = cube_exterior_integral(d, p) * std::pow(far + 0.5, d - p);
    return constant * (sum + beyond);
}

} // namespace

ResidualReport ground_state_residual(const KernelTable& kappa_sigma, const KernelTable& kappa_neg_alpha,
                                     const LatticePoint& x, int radius, const QuadratureSpec& q) {
    require_operator_table(kappa_sigma, "ground_state_residual");
    const int d = x.dimension();
    require_dimension(kappa_sigma.dimension(), d, "ground_state_residual");
    require_dimension(kappa_neg_alpha.dimension(), d, "ground_state_residual");
    const double sigma = kappa_sigma.alpha();
    const double alpha = -kappa_neg_alpha.alpha();
    ModelParams::validate(d, sigma);
    if (!(alpha >= sigma && alpha < 0.5 * d))
        throw DomainError("ground_state_residual: alpha must lie in [sigma, d/2)");
    if (radius < 4 * (x.norm_inf() + 1))
        throw DomainError("ground_state_residual: radius must be at least 4 (|x|_inf + 1)");
    if (kappa_neg_alpha.radius() < radius || kappa_sigma.radius() < radius + x.norm_inf())
        throw CoverageError("ground_state_residual: tables do not cover the truncation box");

    ResidualReport rep;
    const double gx = kappa_neg_alpha(x);
    double main = 0.0;
    double inner_mass = 0.0;
    std::vector<int> y(static_cast<std::size_t>(d), -radius);
    std::vector<int> diff(static_cast<std::size_t>(d));
    while (true) {
        for (int k = 0; k < d; ++k)
            diff[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(k)];
        const double ks = kappa_sigma.lookup(diff);
        inner_mass += ks;
        main += ks * (gx - kappa_neg_alpha.lookup(y));
        int k = d - 1;
        while (k >= 0 && y[static_cast<std::size_t>(k)] == radius) y[static_cast<std::size_t>(k--)] = -radius;
        if (k < 0) break;
        ++y[static_cast<std::size_t>(k)];
    }
    const double outside_mass = kappa_sigma.mass() - inner_mass;
    const int far = d == 1 ? 100 * radius : 2 * radius;
    const double constant = riesz_asymptotic_constant(sigma, d) * riesz_asymptotic_constant(-alpha, d);
    const double far_sum = far_tail(x, radius, far, constant, d + 2.0 * sigma, d - 2.0 * alpha);

    rep.main_sum = main;
    rep.tail_correction = gx * outside_mass - far_sum;
    rep.target = riesz(sigma - alpha, x, q);
    rep.residual = rep.main_sum + rep.tail_correction - rep.target;
    if (std::abs(rep.tail_correction) > 0.1 * std::abs(rep.main_sum))
        rep.warnings.push_back("tail correction " + std::to_string(rep.tail_correction) +
                               " exceeds 10% of the main sum " + std::to_string(rep.main_sum));
    return rep;
}

ResidualReport ground_state_residual(double sigma, double alpha, const LatticePoint& x, int radius,
                                     const QuadratureSpec& q) {
    const int d = x.dimension();
    ModelParams::validate(d, sigma);
    if (!(alpha >= sigma && alpha < 0.5 * d))
        throw DomainError("ground_state_residual: alpha must lie in [sigma, d/2)");
    if (radius < 4 * (x.norm_inf() + 1))
        throw DomainError("ground_state_residual: radius must be at least 4 (|x|_inf + 1)");
    const auto ks = build_table(sigma, d, radius + x.norm_inf(), q);
    const auto kg = build_table(-alpha, d, radius, q);
    return ground_state_residual(ks, kg, x, radius, q);
}

} // namespace frachardy
