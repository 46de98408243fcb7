#pragma once

namespace fracineq {

/// A special-function value together with a conservative (not rigorous)
/// estimate of its absolute error.
struct SpecialValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// Γ(x) for x > 0 via a g = 7, nine-term Lanczos approximation.
/// Relative error ≤ 1e-12 on (0, 50]. Throws DomainError for x ≤ 0, non-finite
/// x, or x large enough that Γ(x) overflows.
SpecialValue gamma(double x);

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// β(p, q) = Γ(p)Γ(q)/Γ(p+q), evaluated in log space.
SpecialValue beta(double p, double q);

/// Non-regularized incomplete Beta ∫_0^x t^(p-1) (1-t)^(q-1) dt, 0 ≤ x ≤ 1.
/// Adaptive quadrature; the endpoint weight is absorbed by a power
/// substitution when p < 1 (near 0) or q < 1 (near 1).
SpecialValue incomplete_beta(double x, double p, double q);

} // namespace fracineq
