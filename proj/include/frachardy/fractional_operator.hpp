#pragma once

#include "frachardy/lattice_function.hpp"
#include "frachardy/quadrature.hpp"
#include "frachardy/riesz_kernel.hpp"

#include <string>
#include <vector>

namespace frachardy {

/// Delta^sigma f(x) = sum_y kappa_sigma(x - y) (f(x) - f(y))
///                  = f(x) m_sigma - sum_{y in supp f} kappa_sigma(x - y) f(y).
/// The table must be for sigma in (0, 1], carry its total mass and cover
/// x - supp f.
double apply_frac_laplacian(const KernelTable& kappa_sigma, const LatticeFunction& f, const LatticePoint& x);

/// G^sigma(x, y) = kappa_{-sigma}(x - y). Requires (d, sigma) to be valid
/// model parameters, i.e. the operator to be transient.
double green_kernel(double sigma, const LatticePoint& x, const LatticePoint& y, const QuadratureSpec& q = {});

/// G^sigma k(x) = sum_y kappa_{-sigma}(x - y) k(y).
double green_apply(double sigma, const LatticeFunction& k, const LatticePoint& x, const QuadratureSpec& q = {});

/// Q(phi) = 1/2 sum_{x,y in S} kappa(x - y) (phi(x) - phi(y))^2
///        + sum_{x in S} phi(x)^2 (m_sigma - sum_{y in S} kappa(x - y)),  S = supp phi,
/// which is exact for finitely supported phi. The table must cover
/// twice the support radius.
double quadratic_form(const KernelTable& kappa_sigma, const LatticeFunction& phi);

/// The same form for a function on the box [-R, R]^d, evaluated as
/// m_sigma sum phi^2 - <phi, kappa * phi> with the convolution done by FFT.
/// The table must have radius at least 2R.
double quadratic_form_box(const KernelTable& kappa_sigma, const BoxFunction& phi);

struct ResidualReport {
    double residual = 0.0;         ///< main + tail_correction - target
    double main_sum = 0.0;         ///< sum_{|y|_inf <= R} kappa_sigma(x-y)(kappa_{-alpha}(x) - kappa_{-alpha}(y))
    double tail_correction = 0.0;  ///< the same sum over |y|_inf > R
    double target = 0.0;           ///< kappa_{sigma-alpha}(x)
    std::vector<std::string> warnings;
};

/// Checks Delta^sigma kappa_{-alpha} = kappa_{sigma-alpha} at x, for
/// sigma in (0, 1] and alpha in [sigma, d/2), by truncating the sum at the
/// l-infinity radius R >= 4(|x|_inf + 1).
///
/// The kappa_{-alpha}(x) part of the tail is exact through the total mass.
/// The remaining sum over |y|_inf > R of kappa_sigma(x-y) kappa_{-alpha}(y)
/// uses the leading asymptotics of both kernels, summed on the lattice up to
/// a far radius and integrated beyond it.
ResidualReport ground_state_residual(double sigma, double alpha, const LatticePoint& x, int radius,
                                     const QuadratureSpec& q = {});

/// As above with prebuilt tables: kappa_sigma (with mass) of radius at least
/// R + |x|_inf and kappa_{-alpha} of radius at least R.
ResidualReport ground_state_residual(const KernelTable& kappa_sigma, const KernelTable& kappa_neg_alpha,
                                     const LatticePoint& x, int radius, const QuadratureSpec& q = {});

/// int_{|u|_inf > 1} |u|^{-p} du over R^d, for p > d.
double cube_exterior_integral(int dimension, double p);

} // namespace frachardy
