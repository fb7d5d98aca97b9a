// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "frachardy/asymptotics.hpp"
#include "frachardy/criticality.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/hardy_weights.hpp"
#include "frachardy/heat_kernel.hpp"
#include "frachardy/riesz_kernel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace frachardy;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

Outcome classical_constant() {
    double worst = 0.0;
    for (int d = 3; d <= 8; ++d) worst = std::max(worst, rel_err(optimal_constant(1.0, d), (d - 2.0) * (d - 2.0) / 4.0));
    return {worst <= 1e-12, "max rel err " + fmt("%.2e", worst) + " over d = 3..8"};
}

Outcome constant_coincidence() {
    double worst = 0.0;
    int points = 0;
    for (int d = 3; d <= 7; ++d)
        for (double s : {0.2, 0.4, 0.6, 0.8}) {
            worst = std::max(worst, rel_err(psi(s, d, ModelParams(d, s).alpha0()), optimal_constant(s, d)));
            ++points;
        }
    return {worst <= 1e-12, "max rel err " + fmt("%.2e", worst) + " over " + std::to_string(points) + " points"};
}

const std::vector<int> asym_radii = {20, 30, 45, 70, 100, 140, 200};

double at_100(const AsymptoticFit& f) {
    for (const auto& [r, v] : f.deviations)
        if (r == 100) return v;
    return NAN;
}

Outcome riesz_asymptotics() {
    bool ok = true;
    std::string detail;
    for (auto [d, a] : std::vector<std::pair<int, double>>{{1, -0.25}, {2, -0.5}, {3, 0.5}, {3, -1.0}}) {
        const auto f = riesz_asymptotic_fit(a, d, asym_radii);
        const double dev = at_100(f);
        ok = ok && std::abs(f.slope + 2.0) <= 0.3 && dev < 0.01;
        detail += "(" + std::to_string(d) + "," + fmt("%g", a) + ") slope " + fmt("%.3f", f.slope) + " dev@100 " +
                  fmt("%.2e", dev) + "; ";
    }
    return {ok, detail};
}

Outcome weight_asymptotics() {
    const double s = 0.25;
    const auto f = weight_asymptotic_fit(s, 1, ModelParams(1, s).alpha0(), asym_radii);
    const double dev = at_100(f);
    return {dev <= 0.02 && std::abs(f.slope + 2.0) <= 0.3,
            "dev@100 " + fmt("%.2e", dev) + " slope " + fmt("%.3f", f.slope)};
}

Outcome ground_state() {
    const double s = 0.25;
    const double a = 0.4;
    const int R = 400;
    const auto ks = build_table(s, 1, R + 10);
    const auto kn = build_table(-a, 1, R);
    double worst = 0.0;
    for (int x = -10; x <= 10; ++x) {
        const auto r = ground_state_residual(ks, kn, {x}, R);
        worst = std::max(worst, std::abs(r.residual) / r.target);
    }
    return {worst <= 1e-5, "max |res|/target " + fmt("%.2e", worst) + " over |x| <= 10, R = 400"};
}

Outcome hardy_inequality() {
    struct Config {
        int d;
        double s;
        double a;
    };
    bool ok = true;
    double worst = 1e300;
    for (auto [d, s, a] : std::vector<Config>{{1, 0.25, 0.3}, {1, 0.25, 0.375}, {2, 0.5, 0.9}, {3, 0.5, 1.0}, {3, 1.0, 1.1}}) {
        const int box = d <= 2 ? 6 : 3;
        const auto t = HardyTables::build(HardyParams(d, s, a), box);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto phi = LatticeFunction::random_box(d, box, seed);
            const double q = quadratic_form(t.kappa_sigma, phi);
            const double rel = hardy_deficit(t, phi) / q;
            worst = std::min(worst, rel);
            ok = ok && rel >= -1e-8;
        }
    }
    return {ok, "min deficit/Q " + fmt("%.3e", worst) + " over 5 x 100 functions"};
}

Outcome trichotomy() {
    const std::vector<double> alphas = {0.75, 1.0, 1.25};
    const std::vector<double> want = {-2.0, -1.0, 0.0};
    const std::vector<Criticality> cls = {Criticality::PositiveCritical, Criticality::NullCritical,
                                          Criticality::Subcritical};
    const auto rep = scan(0.5, 3, alphas, std::vector<int>{10, 20, 40, 80});
    bool ok = true;
    std::string detail = "exponents";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto& sc = rep.scans[i];
        ok = ok && std::abs(sc.shell_exponent - want[i]) <= 0.2 && classify(0.5, 3, alphas[i]) == cls[i];
        detail += " " + fmt("%.4f", sc.shell_exponent) + " (" + to_string(classify(0.5, 3, alphas[i])) + ")";
    }
    return {ok, detail};
}

Outcome null_trend() {
    const std::vector<double> eps = {0.1, 0.05, 0.025};
    const auto reps = null_sequence_energies(0.5, 3, eps, 60);
    bool ok = true;
    std::string detail = "energies";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        ok = ok && reps[i].energy >= 0.0 && (i == 0 || reps[i].energy < reps[i - 1].energy);
        detail += " " + fmt("%.5f", reps[i].energy);
    }
    detail += " (boundary";
    for (const auto& r : reps) detail += " " + fmt("%.5f", r.boundary);
    detail += ")";
    return {ok, detail};
}

Outcome heat_normalization() {
    double total = 0.0;
    for (int a = -60; a <= 60; ++a)
        for (int b = -60; b <= 60; ++b) total += heat_kernel(5.0, {a, b});
    double worst = 0.0;
    const int K = 80;
    for (double t : {0.5, 1.0, 2.5, 5.0})
        for (double s : {0.5, 1.0, 2.5, 5.0})
            for (int m = -10; m <= 10; ++m) {
                double conv = 0.0;
                for (int k = -K; k <= K; ++k) conv += heat_kernel_1d(t, k) * heat_kernel_1d(s, m - k);
                worst = std::max(worst, std::abs(conv - heat_kernel_1d(t + s, m)));
            }
    return {total >= 1.0 - 1e-10 && worst <= 1e-9,
            "1 - sum " + fmt("%.2e", 1.0 - total) + ", semigroup err " + fmt("%.2e", worst)};
}

Outcome form_operator() {
    double worst = 0.0;
    for (auto [d, s] : std::vector<std::pair<int, double>>{{1, 0.25}, {2, 0.5}}) {
        const int box = 6;
        const auto ks = build_table(s, d, 2 * box);
        for (std::uint64_t seed = 100; seed < 150; ++seed) {
            const auto phi = LatticeFunction::random_box(d, box, seed);
            double pairing = 0.0;
            for (const auto& [x, v] : phi.entries()) pairing += v * apply_frac_laplacian(ks, phi, x);
            worst = std::max(worst, rel_err(quadratic_form(ks, phi), pairing));
        }
    }
    return {worst <= 1e-9, "max rel err " + fmt("%.2e", worst) + " over 2 x 50 functions"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"optimal constant, classical case", classical_constant},
        {"constant coincidence", constant_coincidence},
        {"Riesz kernel asymptotics", riesz_asymptotics},
        {"weight asymptotics", weight_asymptotics},
        {"ground-state identity", ground_state},
        {"Hardy inequality", hardy_inequality},
        {"trichotomy corroboration", trichotomy},
        {"null-sequence trend", null_trend},
        {"heat-kernel normalization", heat_normalization},
        {"form/operator equivalence", form_operator},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %s  %s: %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
