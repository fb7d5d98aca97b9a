#pragma once

#include "frachardy/lattice.hpp"

#include <vector>

namespace frachardy {

/// One-dimensional factor e^{-2t} I_|m|(2t) of the heat kernel of the
/// standard Laplacian on Z. Exactly the indicator of m = 0 at t = 0.
double heat_kernel_1d(double t, int m);

/// p_t(m) for m = 0..max_m at a single time, from one Bessel recurrence.
std::vector<double> heat_kernel_1d_profile(double t, int max_m);

/// p_t(x) = e^{-t Delta} 1_0(x) on Z^d, the product of the 1-D factors.
double heat_kernel(double t, const LatticePoint& x);

/// Leading large-time term (4 pi t)^{-d/2} exp(-|x|^2 / (4t)).
double gaussian_main_term(double t, const LatticePoint& x);

/// Upper bound t^{|x|_inf} / |x|_inf! on p_t(x), valid for every t > 0 since
/// e^{-2t} I_m(2t) <= t^m / m! and the other factors are at most 1.
/// Restricted to 0 < t < |x|_inf where it is used as a truncation budget.
double small_t_bound(double t, const LatticePoint& x);

/// The constant C in small_t_bound(t, x) = C t^{|x|_inf}.
double small_t_bound_constant(const LatticePoint& x);

} // namespace frachardy
