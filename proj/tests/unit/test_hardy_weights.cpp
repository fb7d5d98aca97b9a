#include <doctest.h>

#include "frachardy/asymptotics.hpp"
#include "frachardy/errors.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/hardy_weights.hpp"

#include <cmath>
#include <vector>

using namespace frachardy;

namespace {

bool rel_close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

} // namespace

TEST_CASE("psi reference values") {
    CHECK(rel_close(psi(0.5, 2, 0.75), 0.22847329052223181269, 1e-13));
    CHECK(rel_close(psi(0.7, 5, 1.6), 1.8449829604491484564, 1e-13));
    CHECK(rel_close(psi(0.25, 1, 0.3), 0.093155575103745686229, 1e-13));
    CHECK(rel_close(psi(1.0, 3, 1.1), 0.16, 1e-13));
    CHECK(rel_close(optimal_constant(0.5, 2), 0.22847329052223181269, 1e-13));
    CHECK(rel_close(optimal_constant(1.0, 3), 0.25, 1e-14));
    CHECK(rel_close(psi(1.0, 3, 1.25), 0.25, 1e-14));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HardyParams(3, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(HardyParams(3, 0.5, 1.5), DomainError);
    CHECK_THROWS_AS(HardyParams(1, 0.6, 0.55), DomainError);
    CHECK_THROWS_AS(psi(0.5, 3, 0.4), DomainError);
    CHECK_NOTHROW(HardyParams(3, 0.5, 0.5000001));
    CHECK(alpha0(ModelParams(3, 0.5)) == 1.0);
    CHECK(alpha0(ModelParams(1, 0.25)) == 0.375);
}

TEST_CASE("psi peaks at alpha0 and is log-concave") {
    for (auto [d, s] : std::vector<std::pair<int, double>>{{1, 0.25}, {2, 0.5}, {3, 0.5}, {3, 1.0}, {6, 0.8}}) {
        const double a0 = ModelParams(d, s).alpha0();
        const double top = psi(s, d, a0);
        CHECK(std::abs(psi_log_derivative(s, d, a0)) < 1e-12);
        const int n = 40;
        const double h = (0.5 * d - s) / n;
        std::vector<double> lp;
        for (int i = 1; i < n; ++i) {
            const double a = s + i * h;
            lp.push_back(std::log(psi(s, d, a)));
            if (std::abs(a - a0) > 1e-9) CHECK(psi(s, d, a) < top);
        }
        for (std::size_t i = 1; i + 1 < lp.size(); ++i) CHECK(lp[i - 1] - 2.0 * lp[i] + lp[i + 1] < 0.0);

        // the log derivative agrees with a central difference
        const double a = s + 0.3 * (0.5 * d - s);
        const double e = 1e-5;
        const double fd = (std::log(psi(s, d, a + e)) - std::log(psi(s, d, a - e))) / (2.0 * e);
        CHECK(std::abs(fd - psi_log_derivative(s, d, a)) < 1e-6 * (1.0 + std::abs(fd)));
    }
}

TEST_CASE("psi is quadratically flat at alpha0") {
    for (auto [d, s] : std::vector<std::pair<int, double>>{{1, 0.25}, {3, 0.5}, {4, 1.0}}) {
        const double a0 = ModelParams(d, s).alpha0();
        const double top = psi(s, d, a0);
        for (double sign : {-1.0, 1.0}) {
            std::vector<double> q;
            for (double e = 0.1; e > 0.01; e /= 2.0) q.push_back((top - psi(s, d, a0 + sign * e)) / (e * e));
            for (double v : q) CHECK(v > 0.0);
            // successive quotients settle towards -psi''(alpha0)/2
            for (std::size_t i = 2; i < q.size(); ++i)
                CHECK(std::abs(q[i] - q[i - 1]) < std::abs(q[i - 1] - q[i - 2]) + 1e-9 * q[i]);
            CHECK(rel_close(q.back(), q[q.size() - 2], 0.01));
        }
    }
}

TEST_CASE("weight reference values") {
    CHECK(rel_close(hardy_weight(HardyParams(1, 0.25, 0.3), {5}), 0.041671802011837650007, 1e-9));
    CHECK(rel_close(hardy_weight(HardyParams(2, 0.5, 0.9), {3, 2}), 0.041305502402044888538, 1e-9));
    CHECK_THROWS_AS(hardy_weight(HardyParams(2, 0.5, 0.9), {3}), DomainError);

    const auto t = HardyTables::build(HardyParams(2, 0.5, 0.9), 6);
    CHECK(t.radius() == 6);
    CHECK(t.kappa_sigma.radius() == 12);
    const int c[2] = {3, -2};
    CHECK(rel_close(t.weight(c), 0.041305502402044888538, 1e-9));
}

TEST_CASE("weight asymptotics") {
    const std::vector<int> radii = {20, 30, 45, 70, 100, 140, 200};
    struct Case {
        int d;
        double s;
        double a;
    };
    for (auto [d, s, a] : std::vector<Case>{{1, 0.25, 0.375}, {1, 0.25, 0.3}, {2, 0.5, 0.9}, {1, 0.4, 0.45}}) {
        const auto f = weight_asymptotic_fit(s, d, a, radii);
        CHECK(f.slope >= -2.3);
        CHECK(f.slope <= -1.7);
    }
}

TEST_CASE("Hardy inequality on random functions") {
    const HardyParams hp(1, 0.25, 0.375);
    const auto t = HardyTables::build(hp, 6);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto phi = LatticeFunction::random_box(1, 6, seed);
        const double form = quadratic_form(t.kappa_sigma, phi);
        CHECK(hardy_deficit(t, phi) >= -1e-8 * form);
    }
    CHECK_THROWS_AS(hardy_deficit(t, LatticeFunction::random_box(1, 7, 1)), CoverageError);
    CHECK_THROWS_AS(hardy_deficit(t, LatticeFunction::random_box(2, 2, 1)), DomainError);
}
