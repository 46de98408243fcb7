#include "fracineq/fracint.hpp"

#include "fracineq/error.hpp"
#include "fracineq/specfun.hpp"

#include <cmath>

namespace fracineq {
namespace {

void check_order(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha", alpha, "fractional order must be > 0");
}

void check_point(const FracParams& p, double x) {
    if (!(x >= p.a && x <= p.b)) throw DomainError("x", x, "evaluation point must lie in [a, b]");
}

// Runs a power-weighted integral with its tolerance tightened by `scale`,
// so that scale * result meets abs_tol, and rescales any failure report.
template <typename Fn>
double scaled(Fn&& fn, double scale, const QuadSettings& s) {
    QuadSettings inner = s;
    inner.abs_tol = s.abs_tol / scale;
    try {
        return scale * fn(inner).value;
    } catch (const AccuracyError& e) {
        throw AccuracyError(scale * e.estimate(), scale * e.residual(), e.what());
    }
}

struct KinkHalves {
    double lower;  // ∫_0^{1/2} ((1-t)^α - t^α) g
    double upper;  // ∫_{1/2}^1 (t^α - (1-t)^α) g
};

KinkHalves kink_halves(const Integrand& g, double alpha, const QuadSettings& s) {
    check_order(alpha);
    QuadSettings half = s;
    half.abs_tol = 0.5 * s.abs_tol;
    const auto lower = [&](double t) { return (std::pow(1.0 - t, alpha) - std::pow(t, alpha)) * g(t); };
    const auto upper = [&](double t) { return (std::pow(t, alpha) - std::pow(1.0 - t, alpha)) * g(t); };
    return {integrate(lower, 0.0, 0.5, half).value, integrate(upper, 0.5, 1.0, half).value};
}

} // namespace

void FracParams::validate() const {
    check_order(alpha);
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("interval", a, "interval endpoints must be finite");
    if (a > b) throw DomainError("a", a, "interval needs a <= b");
}

double rl_left(const Integrand& f, const FracParams& p, double x, const QuadSettings& s) {
    p.validate();
    check_point(p, x);
    if (x == p.a) return 0.0;
    const double inv_gamma = 1.0 / gamma(p.alpha).value;
    return scaled([&](const QuadSettings& q) { return integrate_right_power_weight(f, p.a, x, p.alpha, q); },
                  inv_gamma, s);
}

double rl_right(const Integrand& f, const FracParams& p, double x, const QuadSettings& s) {
    p.validate();
    check_point(p, x);
    if (x == p.b) return 0.0;
    const double inv_gamma = 1.0 / gamma(p.alpha).value;
    return scaled([&](const QuadSettings& q) { return integrate_left_power_weight(f, x, p.b, p.alpha, q); },
                  inv_gamma, s);
}

std::string to_string(Orientation o) {
    switch (o) {
    case Orientation::A: return "A";
    case Orientation::B: return "B";
    case Orientation::C: return "C";
    case Orientation::D: return "D";
    }
    return "?";
}

Segment segment(Orientation o, double a, double b, double m) {
    switch (o) {
    case Orientation::A: return {a, m * b};
    case Orientation::B: return {m * b, a};
    case Orientation::C: return {b, m * a};
    case Orientation::D: return {m * a, b};
    }
    return {a, b};
}

std::string rl_anchor(Orientation o) {
    switch (o) {
    case Orientation::A: return "J_{a+}^alpha f(mb)";
    case Orientation::B: return "J_{(mb)-}^alpha f(a)";
    case Orientation::C: return "J_{b-}^alpha f(ma)";
    case Orientation::D: return "J_{(ma)+}^alpha f(b)";
    }
    return "?";
}

double t_moment(const Integrand& f, double a, double b, double m, double alpha, Orientation o,
                const QuadSettings& s) {
    check_order(alpha);
    const Segment seg = segment(o, a, b, m);
    const auto image = [&](double t) { return f(t * seg.at_one + (1.0 - t) * seg.at_zero); };
    QuadSettings half = s;
    half.abs_tol = 0.5 * s.abs_tol;
    const double singular = integrate_left_power_weight(image, 0.0, 0.5, alpha, half).value;
    const double regular =
        integrate([&](double t) { return std::pow(t, alpha - 1.0) * image(t); }, 0.5, 1.0, half).value;
    return singular + regular;
}

double t_moment_via_rl(const Integrand& f, double a, double b, double m, double alpha, Orientation o,
                       const QuadSettings& s) {
    check_order(alpha);
    const Segment seg = segment(o, a, b, m);
    const double length = std::abs(seg.at_zero - seg.at_one);
    if (length == 0.0) return f(seg.at_zero) / alpha;
    const double scale = gamma(alpha).value * std::pow(length, -alpha);
    QuadSettings inner = s;
    inner.abs_tol = s.abs_tol / scale;
    if (seg.at_one < seg.at_zero) {
        const FracParams p{alpha, seg.at_one, seg.at_zero};
        return scale * rl_left(f, p, seg.at_zero, inner);
    }
    const FracParams p{alpha, seg.at_zero, seg.at_one};
    return scale * rl_right(f, p, seg.at_zero, inner);
}

double kink_integral(const Integrand& g, double alpha, const QuadSettings& s) {
    const KinkHalves h = kink_halves(g, alpha, s);
    return h.lower + h.upper;
}

double signed_kink_integral(const Integrand& g, double alpha, const QuadSettings& s) {
    const KinkHalves h = kink_halves(g, alpha, s);
    return h.lower - h.upper;
}

} // namespace fracineq
