#pragma once

#include "fracineq/expr.hpp"

#include <optional>

namespace fracineq {

/// Convexity-class parameters. The Hölder conjugate p is always derived from
/// q (p = q/(q-1), +inf when q == 1) and can never be set on its own.
class ClassParams {
public:
    /// Throws PreconditionError unless (alpha1, m) ∈ (0,1]² and q ≥ 1.
    static ClassParams make(double m, double alpha1 = 1.0, double q = 1.0);

    double m() const noexcept { return m_; }
    double alpha1() const noexcept { return alpha1_; }
    double q() const noexcept { return q_; }
    double p() const noexcept;

private:
    ClassParams(double m, double alpha1, double q) : m_(m), alpha1_(alpha1), q_(q) {}

    double m_;
    double alpha1_;
    double q_;
};

/// A point where a defining inequality fails. For the two-point class
/// inequality (x, y, t) are the arguments; for pair/point checks y and t are
/// the second grid point and 0. `defect` is LHS - RHS (positive = violation).
struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double defect = 0.0;
};

/// Outcome of a grid certification. "holds" is grid evidence only; "fails"
/// is definitive because the witness has been re-evaluated.
struct Certificate {
    bool holds = true;
    std::optional<Witness> witness;
    double max_violation = 0.0;  // largest defect seen (≤ 0 means none)
    long grid_size = 0;          // number of grid points evaluated
};

struct CertSettings {
    int grid_n = 64;
    double tol = 1e-9;
    /// Return as soon as one violation is confirmed instead of scanning the
    /// whole grid; max_violation is then a lower bound.
    bool stop_at_first_violation = false;
};

/// f(tx + m(1-t)y) - [w f(x) + m(1-w) f(y)] with w = t^alpha1, evaluated
/// directly (no grid machinery).
double class_defect(const FunctionSpec& f, double m, double alpha1, double x, double y, double t);

/// Tolerance used for a violation at a point whose terms have magnitude
/// `scale`: tol * max(1, scale).
double violation_threshold(double tol, double scale);

/// Grid certification of f(tx + m(1-t)y) ≤ t^α₁ f(x) + m(1-t^α₁) f(y) over
/// (x, y, t) ∈ [lo, hi]² × [0, 1], followed by one local maximization of the
/// defect around the worst grid point. Evaluation errors propagate as EvalError.
Certificate certify_class(const FunctionSpec& f, double lo, double hi, double m, double alpha1,
                          const CertSettings& s);

/// m-convexity on [0, B].
Certificate certify_m_convex(const FunctionSpec& f, double B, double m, int grid_n = 64, double tol = 1e-9);
Certificate certify_m_convex(const FunctionSpec& f, double B, double m, const CertSettings& s);

/// (α₁, m)-convexity on [0, B].
Certificate certify_alpha_m_convex(const FunctionSpec& f, double B, const ClassParams& params, int grid_n = 64,
                                   double tol = 1e-9);
Certificate certify_alpha_m_convex(const FunctionSpec& f, double B, const ClassParams& params,
                                   const CertSettings& s);

/// |f'(x_i)| ≥ |f'(x_{i+1})| - tol on a grid_n-point grid of [a, b]; the
/// witness is the first violating pair (x_i, x_{i+1}).
Certificate certify_decreasing_abs_derivative(const FunctionSpec& f, double a, double b, int grid_n = 64,
                                              double tol = 1e-9);

/// f(x_i) ≥ -tol on a grid_n-point grid of [a, b].
Certificate certify_nonnegative(const FunctionSpec& f, double a, double b, int grid_n = 64, double tol = 1e-9);

} // namespace fracineq
