#include "frachardy/hardy_weights.hpp"

#include "frachardy/errors.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

namespace frachardy {

namespace {

void check_open_range(double sigma, int d, double alpha, const char* op) {
    if (!(alpha > sigma && alpha < 0.5 * d))
        throw DomainError(std::string(op) + ": alpha = " + std::to_string(alpha) + " must lie strictly inside (sigma, d/2)");
}

} // namespace

HardyParams::HardyParams(ModelParams params, double alpha) : params_(params), alpha_(alpha) {
    check_open_range(params.sigma(), params.dimension(), alpha, "HardyParams");
}

double alpha0(const ModelParams& params) { return params.alpha0(); }

double hardy_weight(const HardyParams& hp, const LatticePoint& x, const QuadratureSpec& q) {
    if (x.dimension() != hp.dimension()) throw DomainError("hardy_weight: dimension mismatch");
    return riesz(hp.sigma() - hp.alpha(), x, q) / riesz(-hp.alpha(), x, q);
}

double psi(double sigma, int dimension, double alpha) {
    ModelParams::validate(dimension, sigma);
    check_open_range(sigma, dimension, alpha, "psi");
    const double h = 0.5 * dimension;
    return std::exp(sigma * std::log(4.0) + ln_gamma(h - alpha + sigma) + ln_gamma(alpha) - ln_gamma(h - alpha) -
                    ln_gamma(alpha - sigma));
}

double psi_log_derivative(double sigma, int dimension, double alpha) {
    ModelParams::validate(dimension, sigma);
    check_open_range(sigma, dimension, alpha, "psi_log_derivative");
    const double h = 0.5 * dimension;
    return -digamma(h + sigma - alpha) + digamma(alpha) + digamma(h - alpha) - digamma(alpha - sigma);
}

double optimal_constant(double sigma, int dimension) {
    ModelParams::validate(dimension, sigma);
    const double q = 0.25 * dimension;
    if (!(q - 0.5 * sigma > 0.0)) throw DomainError("optimal_constant: requires sigma < d/2");
    return std::exp(sigma * std::log(4.0) + 2.0 * (ln_gamma(q + 0.5 * sigma) - ln_gamma(q - 0.5 * sigma)));
}

HardyTables HardyTables::build(const HardyParams& hp, int radius, const QuadratureSpec& q) {
    const int d = hp.dimension();
    auto ks = build_table(hp.sigma(), d, 2 * radius, q);
    const std::array<double, 2> alphas = {hp.sigma() - hp.alpha(), -hp.alpha()};
    auto pair = build_tables(alphas, d, radius, q);
    return HardyTables{hp, std::move(ks), std::move(pair[0]), std::move(pair[1])};
}

double HardyTables::weight(std::span<const int> coords) const {
    return numerator.lookup(coords) / denominator.lookup(coords);
}

double hardy_deficit(const HardyTables& tables, const LatticeFunction& phi) {
    if (phi.dimension() != tables.params.dimension()) throw DomainError("hardy_deficit: dimension mismatch");
    if (phi.support_radius() > tables.radius())
        throw CoverageError("hardy_deficit: support radius exceeds the weight tables");
    double weighted = 0.0;
    for (const auto& [x, v] : phi.entries()) weighted += tables.weight(x.coords()) * v * v;
    return quadratic_form(tables.kappa_sigma, phi) - weighted;
}

} // namespace frachardy
