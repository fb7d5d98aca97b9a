#include <doctest.h>

#include "frachardy/errors.hpp"
#include "frachardy/heat_kernel.hpp"
#include "frachardy/lattice.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace frachardy;

TEST_CASE("heat kernel values") {
    CHECK(heat_kernel_1d(0.0, 0) == 1.0);
    CHECK(heat_kernel_1d(0.0, 2) == 0.0);
    CHECK(heat_kernel_1d(1.0, 0) == doctest::Approx(0.30850832255367103953).epsilon(1e-13));
    CHECK(heat_kernel_1d(1.0, -1) == doctest::Approx(0.21526928924893765916).epsilon(1e-13));
    CHECK(heat_kernel(1.0, {0, 0}) == doctest::Approx(0.30850832255367103953 * 0.30850832255367103953).epsilon(1e-13));
    CHECK(heat_kernel(0.0, {3, -1}) == 0.0);
    CHECK(heat_kernel(5.0, {2, 1, 0}) == doctest::Approx(0.0016056487977296666637).epsilon(1e-12));
    CHECK(heat_kernel(10.0, {4}) == doctest::Approx(0.059639604391500384757).epsilon(1e-12));
}

TEST_CASE("gaussian main term") {
    CHECK(gaussian_main_term(1.0, {0}) == doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(gaussian_main_term(10.0, {4}) == doctest::Approx(0.059796707983640990623).epsilon(1e-13));
    // decreasing in t beyond |x|^2/(2d)
    double prev = gaussian_main_term(9.0, {3, 3});
    for (double t = 10.0; t < 500.0; t *= 1.3) {
        const double v = gaussian_main_term(t, {3, 3});
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(gaussian_main_term(0.0, {1}), DomainError);
}

TEST_CASE("small-time bound") {
    const LatticePoint x{3, -1};
    for (double t = 0.05; t < 2.9; t += 0.05) {
        CHECK(small_t_bound(t, x) >= heat_kernel(t, x));
        CHECK(small_t_bound(t, x) / std::pow(t, 3) == doctest::Approx(small_t_bound_constant(x)).epsilon(1e-12));
        CHECK(small_t_bound(t + 0.01, x) > small_t_bound(t, x));
    }
    CHECK_THROWS_AS(small_t_bound(3.0, x), DomainError);
    CHECK_THROWS_AS(small_t_bound(0.5, LatticePoint::zero(2)), DomainError);
}

TEST_CASE("heat kernel positivity and symmetry") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int i = 0; i < 50; ++i) {
        const int a = c(rng), b = c(rng), e = c(rng);
        const double t = 0.1 + 0.3 * i;
        const double v = heat_kernel(t, {a, b, e});
        CHECK(v > 0.0);
        CHECK(heat_kernel(t, {-b, e, a}) == doctest::Approx(v).epsilon(1e-14));
        CHECK(heat_kernel(t, {e, -a, -b}) == doctest::Approx(v).epsilon(1e-14));
    }
}

TEST_CASE("stochastic completeness in d = 2") {
    const auto prof = heat_kernel_1d_profile(5.0, 60);
    double one_d = prof[0];
    for (int m = 1; m <= 60; ++m) one_d += 2.0 * prof[static_cast<std::size_t>(m)];
    double direct = 0.0;
    for (int a = -60; a <= 60; ++a)
        for (int b = -60; b <= 60; ++b) direct += heat_kernel(5.0, {a, b});
    CHECK(direct >= 1.0 - 1e-10);
    CHECK(direct == doctest::Approx(one_d * one_d).epsilon(1e-13));
}

TEST_CASE("semigroup property in d = 1") {
    const int K = 80;
    for (double t : {0.3, 1.0, 5.0})
        for (double s : {0.7, 2.5, 5.0})
            for (int m = -10; m <= 10; m += 3) {
                double conv = 0.0;
                for (int k = -K; k <= K; ++k) conv += heat_kernel_1d(t, k) * heat_kernel_1d(s, m - k);
                CHECK(std::abs(conv - heat_kernel_1d(t + s, m)) <= 1e-9);
            }
}

TEST_CASE("Gaussian approximation error is of order t^{-d/2-1}") {
    // |p_t - g_t| t^{d/2+1} stays bounded for t >= 20
    double worst = 0.0;
    for (double t = 20.0; t <= 2000.0; t *= 1.5)
        for (int r : {0, 2, 5, 11}) {
            const LatticePoint x{r, r / 2};
            const double u = x.norm_squared() / t;
            const double env = (1.0 + u * u) * std::exp(-x.norm_squared() / (4.0 * t)) + 1.0;
            const double diff = std::abs(heat_kernel(t, x) - gaussian_main_term(t, x));
            worst = std::max(worst, diff * std::pow(t, 2.0) / env);
        }
    CHECK(std::isfinite(worst));
    CHECK(worst < 1.0);
}
