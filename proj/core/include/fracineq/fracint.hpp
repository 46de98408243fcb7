#pragma once

#include "fracineq/quadrature.hpp"

#include <string>

namespace fracineq {

/// Fractional order and interval. a == b is allowed and makes every
/// integral over the interval 0.
struct FracParams {
    double alpha = 1.0;
    double a = 0.0;
    double b = 1.0;

    void validate() const;
};

/// Left-sided Riemann-Liouville integral J_{a+}^α f(x), a ≤ x ≤ b, computed
/// as ((x-a)^α / Γ(α+1)) ∫_0^1 f(x - (x-a) s^(1/α)) ds.
double rl_left(const Integrand& f, const FracParams& p, double x, const QuadSettings& s);

/// Right-sided J_{b-}^α f(x), a ≤ x ≤ b, by the mirrored substitution.
double rl_right(const Integrand& f, const FracParams& p, double x, const QuadSettings& s);

/// The four affine images that appear in the m-convex trapezoid sum:
///   A: f(t a + m(1-t) b)    B: f((1-t) a + m t b)
///   C: f(t b + m(1-t) a)    D: f((1-t) b + m t a)
enum class Orientation { A, B, C, D };

std::string to_string(Orientation o);

/// Endpoints of an orientation's segment, point(t) = t*at_one + (1-t)*at_zero.
struct Segment {
    double at_one;
    double at_zero;
};
Segment segment(Orientation o, double a, double b, double m);

/// ∫_0^1 t^(α-1) f(point(t)) dt. The singular half [0, 1/2] uses t = s^(1/α);
/// the regular half is integrated directly. Shares no code path with the
/// Riemann-Liouville routines.
double t_moment(const Integrand& f, double a, double b, double m, double alpha, Orientation o,
                const QuadSettings& s);

/// The same moment through the matching one-sided RL integral:
/// Γ(α) |at_zero - at_one|^(-α) J f(at_zero), with J = J_{at_one+} when
/// at_one < at_zero and J_{at_one-} otherwise.
double t_moment_via_rl(const Integrand& f, double a, double b, double m, double alpha, Orientation o,
                       const QuadSettings& s);

/// Human-readable name of the RL operator used for an orientation, for example
/// "J_{a+}^alpha f(mb)".
std::string rl_anchor(Orientation o);

/// ∫_0^1 |(1-t)^α - t^α| g(t) dt, split at t = 1/2 where the kernel vanishes.
double kink_integral(const Integrand& g, double alpha, const QuadSettings& s);

/// ∫_0^1 ((1-t)^α - t^α) g(t) dt, same split.
double signed_kink_integral(const Integrand& g, double alpha, const QuadSettings& s);

} // namespace fracineq
