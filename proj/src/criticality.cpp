#include "frachardy/criticality.hpp"

#include "frachardy/errors.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/hardy_weights.hpp"
#include "frachardy/regression.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace frachardy {

std::string to_string(Criticality c) {
    switch (c) {
    case Criticality::PositiveCritical: return "positive_critical";
    case Criticality::NullCritical: return "null_critical";
    case Criticality::Subcritical: return "subcritical";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Convergent: return "convergent";
    case Verdict::LogDivergent: return "log-divergent";
    case Verdict::Divergent: return "divergent";
    }
    return "unknown";
}

Criticality classify(double sigma, int dimension, double alpha) {
    const HardyParams hp(dimension, sigma, alpha);
    const double a0 = hp.params().alpha0();
    if (std::abs(alpha - a0) <= 1e-12) return Criticality::NullCritical;
    return alpha < a0 ? Criticality::PositiveCritical : Criticality::Subcritical;
}

namespace {

void check_pair(const KernelTable& num, const KernelTable& den) {
    if (num.dimension() != den.dimension()) throw DomainError("criticality: table dimensions differ");
}

// signed permutations of a representative with nondecreasing entries
double orbit_count(const std::vector<int>& rep) {
    double n = 1.0;
    const auto d = rep.size();
    for (std::size_t i = 2; i <= d; ++i) n *= static_cast<double>(i);
    std::size_t run = 1;
    for (std::size_t i = 1; i <= d; ++i) {
        if (i < d && rep[i] == rep[i - 1]) {
            ++run;
        } else {
            for (std::size_t j = 2; j <= run; ++j) n /= static_cast<double>(j);
            run = 1;
        }
    }
    for (int c : rep)
        if (c != 0) n *= 2.0;
    return n;
}

} // namespace

double summability_partial(const KernelTable& numerator, const KernelTable& denominator, int radius) {
    check_pair(numerator, denominator);
    if (radius < 0) throw DomainError("summability_partial: radius must be nonnegative");
    if (numerator.radius() < radius || denominator.radius() < radius)
        throw CoverageError("summability_partial: tables do not cover radius " + std::to_string(radius));
    double s = 0.0;
    for (const auto& rep : KernelTable::representatives(numerator.dimension(), radius))
        s += orbit_count(rep) * numerator.lookup(rep) * denominator.lookup(rep);
    return s;
}

std::vector<double> shell_sums(const KernelTable& numerator, const KernelTable& denominator,
                               std::span<const int> radii) {
    check_pair(numerator, denominator);
    int top = 0;
    for (int r : radii) {
        if (r < 1) throw DomainError("shell_sums: radii must be positive");
        top = std::max(top, 2 * r);
    }
    if (numerator.radius() < top || denominator.radius() < top)
        throw CoverageError("shell_sums: tables must cover twice the largest radius");
    std::vector<double> out(radii.size(), 0.0);
    for (const auto& rep : KernelTable::representatives(numerator.dimension(), top)) {
        long long n2 = 0;
        for (int c : rep) n2 += static_cast<long long>(c) * c;
        const double v = orbit_count(rep) * numerator.lookup(rep) * denominator.lookup(rep);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const long long r = radii[i];
            if (n2 > r * r && n2 <= 4 * r * r) out[i] += v;
        }
    }
    return out;
}

double shell_exponent(const KernelTable& numerator, const KernelTable& denominator, std::span<const int> radii) {
    if (radii.size() < 3) throw InsufficientDataError("shell_exponent: need at least three radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 10) throw DomainError("shell_exponent: radii must be at least 10");
        if (i > 0 && radii[i] <= radii[i - 1]) throw DomainError("shell_exponent: radii must increase");
    }
    const auto s = shell_sums(numerator, denominator, radii);
    std::vector<double> x(radii.size());
    std::vector<double> y(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        x[i] = radii[i];
        y[i] = s[i] / radii[i];
    }
    return fit_loglog(x, y).slope;
}

Verdict verdict_for(double exponent) {
    if (exponent < -1.2) return Verdict::Convergent;
    if (exponent > -0.8) return Verdict::Divergent;
    return Verdict::LogDivergent;
}

ScanReport scan(double sigma, int dimension, std::span<const double> alphas, std::span<const int> radii,
                const QuadratureSpec& q) {
    const ModelParams mp(dimension, sigma);
    if (alphas.empty()) throw InsufficientDataError("scan: no exponents given");
    if (radii.size() < 3) throw InsufficientDataError("scan: need at least three radii");
    for (double a : alphas) (void)HardyParams(mp, a);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 10) throw DomainError("scan: radii must be at least 10");
        if (i > 0 && radii[i] <= radii[i - 1]) throw DomainError("scan: radii must increase");
    }
    const int table_radius = 2 * radii.back();

    // distinct kernel exponents, built in one pass
    std::vector<double> exps;
    for (double a : alphas) {
        exps.push_back(sigma - a);
        exps.push_back(-a);
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    auto tables = build_tables(exps, dimension, table_radius, q);
    auto table_for = [&](double a) -> const KernelTable& {
        const auto it = std::lower_bound(exps.begin(), exps.end(), a);
        return tables[static_cast<std::size_t>(it - exps.begin())];
    };

    ScanReport rep;
    rep.dimension = dimension;
    rep.sigma = sigma;
    rep.alpha0 = mp.alpha0();
    rep.radii.assign(radii.begin(), radii.end());
    rep.quadrature = q;
    for (double a : alphas) {
        const auto& num = table_for(sigma - a);
        const auto& den = table_for(-a);
        AlphaScan s;
        s.alpha = a;
        for (int r : radii) s.partial_sums.emplace_back(r, summability_partial(num, den, r));
        s.shell_sums = shell_sums(num, den, radii);
        s.shell_exponent = shell_exponent(num, den, radii);
        s.expected_exponent = 4.0 * a - 2.0 * sigma - dimension - 1.0;
        s.verdict = verdict_for(s.shell_exponent);
        s.classification = classify(sigma, dimension, a);
        rep.scans.push_back(std::move(s));
    }
    return rep;
}

namespace {

void check_epsilon(const ModelParams& mp, double eps) {
    if (!(eps > 0.0 && eps < mp.alpha0() - mp.sigma()))
        throw DomainError("null_sequence_energy: epsilon must lie in (0, alpha0 - sigma)");
}

} // namespace

std::vector<NullEnergyReport> null_sequence_energies(double sigma, int dimension, std::span<const double> epsilons,
                                                     int radius, const QuadratureSpec& q) {
    const ModelParams mp(dimension, sigma);
    if (radius < 1) throw DomainError("null_sequence_energy: radius must be at least 1");
    for (double e : epsilons) check_epsilon(mp, e);
    const double a0 = mp.alpha0();

    const auto ks = build_table(sigma, dimension, 2 * radius, q);
    std::vector<double> exps = {sigma - a0, -a0};
    for (double e : epsilons) {
        exps.push_back(sigma - (a0 - e));
        exps.push_back(-(a0 - e));
    }
    const auto tables = build_tables(exps, dimension, radius, q);
    const KernelTable& num0 = tables[0];
    const KernelTable& den0 = tables[1];

    std::vector<NullEnergyReport> out;
    BoxFunction h(dimension, radius);
    std::vector<int> c(static_cast<std::size_t>(dimension));
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        const KernelTable& num = tables[2 + 2 * k];
        const KernelTable& den = tables[3 + 2 * k];
        NullEnergyReport rep;
        rep.epsilon = epsilons[k];
        rep.alpha = a0 - epsilons[k];
        double w0_sum = 0.0;
        double interior = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            h.coords(i, c);
            const double g = den.lookup(c);
            h[i] = g;
            const double w0 = num0.lookup(c) / den0.lookup(c);
            const double w = num.lookup(c) / g;
            w0_sum += w0 * g * g;
            interior += (w - w0) * g * g;
        }
        rep.form = quadratic_form_box(ks, h);
        rep.energy = rep.form - w0_sum;
        rep.interior = interior;
        rep.boundary = rep.energy - interior;
        if (std::abs(rep.boundary) > 0.25 * std::abs(rep.energy))
            rep.warnings.push_back("truncation boundary contributes " +
                                   std::to_string(100.0 * std::abs(rep.boundary) / std::abs(rep.energy)) +
                                   "% of the energy");
        out.push_back(std::move(rep));
    }
    return out;
}

NullEnergyReport null_sequence_energy(double sigma, int dimension, double epsilon, int radius,
                                      const QuadratureSpec& q) {
    const double e[1] = {epsilon};
    return std::move(null_sequence_energies(sigma, dimension, e, radius, q).front());
}

RatioEstimate weight_ratio_at_infinity(double sigma, int dimension, double alpha, std::span<const int> radii,
                                       const QuadratureSpec& q) {
    const HardyParams hp(dimension, sigma, alpha);
    const double a0 = hp.params().alpha0();
    if (std::abs(alpha - a0) <= 1e-12) throw DomainError("weight_ratio_at_infinity: alpha must differ from alpha0");
    if (radii.size() < 3) throw InsufficientDataError("weight_ratio_at_infinity: need at least three radii");
    const HardyParams hp0(dimension, sigma, a0);
    RatioEstimate est;
    std::vector<double> x;
    std::vector<double> y;
    for (int r : radii) {
        if (r < 1) throw DomainError("weight_ratio_at_infinity: radii must be positive");
        const auto p = LatticePoint::axis(dimension, r);
        const double ratio = hardy_weight(hp, p, q) / hardy_weight(hp0, p, q);
        est.samples.emplace_back(r, ratio);
        x.push_back(1.0 / (static_cast<double>(r) * r));
        y.push_back(ratio);
    }
    est.estimate = fit_line(x, y).intercept;
    est.expected = psi(sigma, dimension, alpha) / psi(sigma, dimension, a0);
    return est;
}

} // namespace frachardy
