#pragma once

#include <functional>
#include <span>

namespace fracineq {

/// Tolerances and limits shared by every numeric integration in the library.
struct QuadSettings {
    double abs_tol = 1e-10;
    int max_subdivisions = 2000;
    int panel_order = 15;

    /// Throws PreconditionError naming the offending field.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;       // estimated absolute error
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

/// Rules are computed once per order by Newton iteration on P_n and cached
/// for the lifetime of the process. Thread-safe.
GaussLegendreRule gauss_legendre(int order);

/// Globally adaptive composite Gauss-Legendre: the panel with the largest
/// error estimate (|coarse - two-half refinement|) is bisected until the
/// summed estimate drops below abs_tol, or below the rounding floor of the
/// integrand's magnitude when abs_tol is unreachable in double precision.
/// lo > hi integrates with the orientation reversed; lo == hi gives 0.
/// Throws AccuracyError once max_subdivisions bisections have been spent.
QuadResult integrate(const Integrand& f, double lo, double hi, const QuadSettings& s);

/// ∫_lo^hi (t - lo)^(beta-1) g(t) dt via t = lo + (hi-lo) s^(1/beta), which
/// turns the algebraic endpoint weight into the constant (hi-lo)^beta / beta.
QuadResult integrate_left_power_weight(const Integrand& g, double lo, double hi, double beta,
                                       const QuadSettings& s);

/// ∫_lo^hi (hi - t)^(beta-1) g(t) dt, mirrored substitution at the upper end.
QuadResult integrate_right_power_weight(const Integrand& g, double lo, double hi, double beta,
                                        const QuadSettings& s);

} // namespace fracineq
