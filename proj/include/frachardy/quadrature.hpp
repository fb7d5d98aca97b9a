#pragma once

namespace frachardy {

/// How the time integral is closed off beyond the last panel.
enum class TailPolicy {
    /// Large-time Hankel expansion of every 1-D factor, multiplied out and
    /// integrated term by term. The truncation error is below the budget.
    AnalyticExpansion,
    /// Only the leading (4 pi t)^{-d/2} power law; the tail start is pushed
    /// out until the first neglected term fits the budget.
    PowerLawBound,
};

/// Tolerances and region split for the singular time integral
///   int_0^inf p_t(x) t^{-1-alpha} dt.
///
/// The integral is split into a head [0, head_end] evaluated from the power
/// series of p_t, a body [head_end, T] integrated with Gauss-Kronrod panels in
/// log t, and a tail [T, inf) with T = max(tail_floor, tail_factor |x|^2).
/// Each region gets a third of the error budget max(rel_tol |value|, abs_tol).
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 60;
    TailPolicy tail_policy = TailPolicy::AnalyticExpansion;
    double head_end = 1.0;
    double tail_factor = 4.0;
    double tail_floor = 100.0;
    /// Initial panel width in s = log t.
    double panel_width = 0.5;

    /// Throws DomainError on an invalid specification.
    void validate() const;

    /// Defaults, with rel_tol taken from FRACHARDY_REL_TOL when set.
    static QuadratureSpec from_environment();
};

} // namespace frachardy
