#pragma once

#include <vector>

namespace frachardy {

/// ln Gamma(x) for x > 0.
///
/// Uses Taylor series about 1 and 2 on [0.5, 2.5) so that the result keeps
/// full relative accuracy near the zeros at x = 1 and x = 2, downward
/// recurrence on [2.5, 10) and the Stirling series above.
double ln_gamma(double x);

/// Gamma(x) for x not a nonpositive integer and x < 171.
/// Negative arguments go through the reflection formula.
double gamma(double x);

/// |Gamma(-beta)| for beta < 1, beta != 0. This is the normalizer of the
/// Riesz kernel integral.
double abs_gamma_neg(double beta);

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// gamma(a, z) / z^a, the lower incomplete Gamma function divided by z^a,
/// for a > 0 and z >= 0. Equals int_0^1 e^{-z u} u^{a-1} du.
double lower_gamma_scaled(double a, double z);

/// e^{-x} I_n(x), the exponentially scaled modified Bessel function of the
/// first kind of integer order n >= 0 and argument x >= 0.
double bessel_i_scaled(int n, double x);

/// e^{-x} I_k(x) for k = 0..max_order from a single normalized backward
/// recurrence.
std::vector<double> bessel_i_scaled_sequence(int max_order, double x);

} // namespace frachardy
