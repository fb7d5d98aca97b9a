#include <doctest.h>

#include "frachardy/errors.hpp"
#include "frachardy/riesz_kernel.hpp"
#include "frachardy/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace frachardy;

namespace {

// kappa_alpha(m) on Z in closed form.
double kappa_1d(double alpha, int m) {
    const double am = std::abs(m);
    return std::exp(alpha * std::log(4.0) + ln_gamma(0.5 + alpha) + ln_gamma(am - alpha) -
                    ln_gamma(am + 1.0 + alpha)) /
           (std::sqrt(std::numbers::pi) * abs_gamma_neg(alpha));
}

bool rel_close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

} // namespace

TEST_CASE("indicator kernels") {
    CHECK(riesz(1.0, {1, 0}) == 1.0);
    CHECK(riesz(1.0, {1, 1}) == 0.0);
    CHECK(riesz(0.0, {0, 0, 0}) == 1.0);
    CHECK(riesz(0.0, {3}) == 0.0);
    CHECK(riesz(0.3, {0}) == 0.0);
    CHECK_THROWS_AS(riesz(-0.5, {2}), DomainError);
    CHECK_THROWS_AS(riesz(1.2, {2}), DomainError);
}

TEST_CASE("kernel reference values") {
    struct Ref { double alpha; LatticePoint x; double v; };
    const Ref refs[] = {
        {-0.25, {5}, 0.17830162158753059874},
        {-0.25, {0}, 1.180340599016096226},
        {0.25, {3}, 0.038722750854550312786},
        {-0.5, {3, 1}, 0.050257251454517467722},
        {0.5, {1, 0}, 0.28018591145634878207},
        {-0.4, {0, 0}, 0.6796295504101029942},
        {-1.0, {0, 0, 0}, 0.25273100985866300303},
        {-1.0, {2, 1, 0}, 0.035931603473490088702},
        {0.5, {0, 0, 1}, 0.22000136302545262063},
        {-0.75, {4, 4, 3}, 0.0038876757936376067374},
        {0.9, {2, 2}, 0.001805086346069421254},
    };
    for (const auto& r : refs) {
        INFO("alpha = " << r.alpha << ", x = " << r.x);
        CHECK(rel_close(riesz(r.alpha, r.x), r.v, 1e-9));
    }
}

TEST_CASE("one-dimensional closed form") {
    for (double alpha : {-0.45, -0.25, -0.1, 0.1, 0.25, 0.5, 0.75, 0.95})
        for (int m : {1, 2, 7, 30, 150, 600}) {
            INFO("alpha = " << alpha << ", m = " << m);
            CHECK(rel_close(riesz(alpha, {m}), kappa_1d(alpha, m), 1e-9));
        }
    for (double alpha : {-0.45, -0.25, -0.1}) CHECK(rel_close(riesz(alpha, {0}), kappa_1d(alpha, 0), 1e-9));
}

TEST_CASE("total mass") {
    CHECK(rel_close(total_mass(0.25, 1), 1.0787052023767587133, 1e-9));
    CHECK(rel_close(total_mass(0.5, 2), 1.9161827973657002561, 1e-9));
    CHECK(rel_close(total_mass(0.5, 3), 2.3876022428595904206, 1e-9));
    CHECK(rel_close(total_mass(0.9, 1), 1.8124351790672195423, 1e-9));
    CHECK(total_mass(1.0, 3) == 6.0);
    // 1-D closed form 4^s Gamma(1/2+s) / (sqrt(pi) Gamma(1+s))
    for (double s = 0.1; s < 0.95; s += 0.1) {
        const double closed = std::exp(s * std::log(4.0) + ln_gamma(0.5 + s) - ln_gamma(1.0 + s)) / std::sqrt(std::numbers::pi);
        CHECK(rel_close(total_mass(s, 1), closed, 1e-9));
    }
    // continuity on a grid
    double prev = total_mass(0.1, 2);
    for (double s = 0.12; s <= 0.9; s += 0.02) {
        const double m = total_mass(s, 2);
        CHECK(std::abs(m - prev) < 0.1);
        prev = m;
    }
}

TEST_CASE("asymptotic constant") {
    CHECK(rel_close(riesz_asymptotic_constant(-0.25, 1), std::pow(4.0, -0.25) / std::sqrt(std::numbers::pi), 1e-13));
    CHECK(rel_close(riesz_asymptotic_constant(0.5, 1), 1.0 / std::numbers::pi, 1e-13));
    CHECK(rel_close(riesz_asymptotic_constant(-1.0, 3), 0.079577471545947667884, 1e-13));
    for (int d = 1; d <= 4; ++d)
        for (double a = -0.49 * d; a < 1.0; a += 0.07)
            if (std::abs(a) > 1e-9) CHECK(riesz_asymptotic_constant(a, d) > 0.0);
    CHECK(riesz_asymptotic(0.5, {4, 0}) == doctest::Approx(riesz_asymptotic(0.5, {2, 0}) * std::pow(2.0, -3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(riesz_asymptotic(0.5, {0, 0}), DomainError);
}

TEST_CASE("positivity and symmetry") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int i = 0; i < 12; ++i) {
        const int a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        for (double alpha : {-0.6, 0.3}) {
            const double v = riesz(alpha, {a, b});
            CHECK(v > 0.0);
            CHECK(rel_close(riesz(alpha, {-b, a}), v, 1e-12));
        }
    }
}

TEST_CASE("regularized kernel increases to the kernel") {
    for (double alpha : {-0.3, 0.4}) {
        const LatticePoint x{3, 1};
        const double full = riesz(alpha, x);
        double prev = 0.0;
        for (double eps : {1.0, 0.1, 0.01, 0.001}) {
            const double v = riesz_regularized(alpha, x, eps);
            CHECK(v > prev);
            CHECK(v < full);
            prev = v;
        }
    }
}

TEST_CASE("kernel tables") {
    const auto t = build_table(-0.5, 2, 12);
    CHECK(t.size() == KernelTable::representative_count(2, 12));
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-12, 12);
    for (int i = 0; i < 20; ++i) {
        const LatticePoint x{c(rng), c(rng)};
        CHECK(rel_close(t(x), riesz(-0.5, x), 1e-9));
    }
    CHECK(t({-3, 7}) == t({7, 3}));
    CHECK_THROWS_AS(t({13, 0}), CoverageError);

    const auto one = build_table(-0.25, 1, 50);
    for (const auto& [x, v] : one.entries()) CHECK(v > 0.0);

    const std::array<double, 3> alphas = {0.25, -0.25, 1.0};
    const auto tabs = build_tables(alphas, 3, 6);
    REQUIRE(tabs.size() == 3);
    CHECK(tabs[0]({0, 0, 0}) == 0.0);
    CHECK(tabs[0].total_mass().has_value());
    CHECK(!tabs[1].total_mass().has_value());
    CHECK(tabs[2]({0, -1, 0}) == 1.0);
    CHECK(rel_close(tabs[1]({5, 2, 6}), riesz(-0.25, {5, 2, 6}), 1e-9));
}

TEST_CASE("box sums increase towards the total mass") {
    const auto t = build_table(0.5, 2, 40);
    double prev = 0.0;
    for (int R = 5; R <= 40; R += 5) {
        double s = 0.0;
        for (int a = -R; a <= R; ++a)
            for (int b = -R; b <= R; ++b) s += t.lookup(std::array<int, 2>{a, b});
        CHECK(s > prev);
        CHECK(s < t.mass());
        // the missing mass is of order R^{-2 sigma}
        const double gap = t.mass() - s;
        CHECK(gap * R < 1.5);
        CHECK(gap * R > 0.2);
        prev = s;
    }
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = {};
    q.max_subdivisions = 5;
    CHECK_THROWS_AS(riesz(0.5, {2}, q), DomainError);
    q = {};
    q.tail_policy = TailPolicy::PowerLawBound;
    CHECK(rel_close(riesz(-0.25, {5}, q), 0.17830162158753059874, 1e-9));
}
