#include "fracineq/quadrature.hpp"

#include "fracineq/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace fracineq {

void QuadSettings::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
        throw PreconditionError("abs_tol", "abs_tol must be a finite positive number");
    if (max_subdivisions < 1)
        throw PreconditionError("max_subdivisions", "max_subdivisions must be at least 1");
    if (panel_order < 2 || panel_order > 256)
        throw PreconditionError("panel_order", "panel_order must lie in [2, 256]");
}

namespace {

struct StoredRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

StoredRule compute_rule(int n) {
    StoredRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // one more derivative evaluation at the converged root
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

struct PanelSum {
    double value = 0.0;
    double magnitude = 0.0;  // ∫|f| estimate, for the rounding floor
};

PanelSum apply_rule(const Integrand& f, const GaussLegendreRule& rule, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    PanelSum sum;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mid + half * rule.nodes[i];
        const double fx = f(x);
        if (!std::isfinite(fx)) throw EvalError(x, "integrand", "non-finite integrand value");
        sum.value += rule.weights[i] * fx;
        sum.magnitude += rule.weights[i] * std::abs(fx);
    }
    sum.value *= half;
    sum.magnitude *= std::abs(half);
    return sum;
}

struct Panel {
    double lo;
    double hi;
    PanelSum left;
    PanelSum right;
    double error;

    double value() const { return left.value + right.value; }
    double magnitude() const { return left.magnitude + right.magnitude; }
};

Panel refine(const Integrand& f, const GaussLegendreRule& rule, double lo, double hi, const PanelSum& coarse) {
    const double mid = 0.5 * (lo + hi);
    Panel p{lo, hi, apply_rule(f, rule, lo, mid), apply_rule(f, rule, mid, hi), 0.0};
    p.error = std::abs(coarse.value - p.value());
    return p;
}

constexpr double kRoundingFloor = 64.0 * std::numeric_limits<double>::epsilon();

} // namespace

GaussLegendreRule gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<StoredRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<StoredRule>(compute_rule(order));
    return {slot->nodes, slot->weights};
}

QuadResult integrate(const Integrand& f, double lo, double hi, const QuadSettings& s) {
    s.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("interval", std::isfinite(lo) ? hi : lo, "integration limits must be finite");
    if (lo == hi) return {};
    if (lo > hi) {
        QuadResult r = integrate(f, hi, lo, s);
        r.value = -r.value;
        return r;
    }

    const GaussLegendreRule rule = gauss_legendre(s.panel_order);
    const auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };

    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(s.max_subdivisions) + 2);
    heap.push_back(refine(f, rule, lo, hi, apply_rule(f, rule, lo, hi)));

    int subdivisions = 0;
    for (;;) {
        double value = 0.0;
        double error = 0.0;
        double magnitude = 0.0;
        for (const Panel& p : heap) {
            value += p.value();
            error += p.error;
            magnitude += p.magnitude();
        }
        const double tol = std::max(s.abs_tol, kRoundingFloor * magnitude);
        if (error <= tol) return {value, error, subdivisions};
        if (subdivisions >= s.max_subdivisions)
            throw AccuracyError(value, error,
                                "adaptive quadrature did not converge within " +
                                    std::to_string(s.max_subdivisions) + " subdivisions");

        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        heap.push_back(refine(f, rule, worst.lo, mid, worst.left));
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(refine(f, rule, mid, worst.hi, worst.right));
        std::push_heap(heap.begin(), heap.end(), by_error);
        ++subdivisions;
    }
}

namespace {

// Below this exponent u^(1/beta) keeps the mapped integrand flat except in a
// layer of width ~beta next to u = 1, which the panel nodes can miss.
constexpr double kSubtractedBelow = 0.1;

// ∫_0^length beta w^(beta-1) g(anchor + dir*w) dw / length^beta, i.e. the
// power-weighted mean of g, with weight singularity at `anchor`.
QuadResult weighted_mean(const Integrand& g, double anchor, double dir, double length, double beta,
                         const QuadSettings& s) {
    if (beta >= kSubtractedBelow) {
        const double inv_beta = 1.0 / beta;
        return integrate([&](double u) { return g(anchor + dir * length * std::pow(u, inv_beta)); }, 0.0, 1.0, s);
    }
    // g(anchor) + ∫_0^1 beta w^(beta-1) (g(anchor + dir*length*w) - g(anchor)) dw; the bracket
    // vanishes like w, so the integrand stays bounded and carries no layer
    const double g0 = g(anchor);
    QuadResult r = integrate(
        [&](double w) { return beta * std::pow(w, beta - 1.0) * (g(anchor + dir * length * w) - g0); }, 0.0, 1.0, s);
    r.value += g0;
    return r;
}

QuadResult power_weighted(const Integrand& g, double lo, double hi, double beta, bool at_lo, const QuadSettings& s) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta", beta, "power weight exponent must be positive");
    if (lo == hi) return {};
    if (lo > hi) throw DomainError("interval", lo, "power-weighted integral needs lo < hi");
    const double length = hi - lo;
    const double scale = std::pow(length, beta) / beta;
    QuadSettings inner = s;
    inner.abs_tol = s.abs_tol / scale;
    try {
        QuadResult r = at_lo ? weighted_mean(g, lo, 1.0, length, beta, inner)
                             : weighted_mean(g, hi, -1.0, length, beta, inner);
        r.value *= scale;
        r.error *= scale;
        return r;
    } catch (const AccuracyError& e) {
        throw AccuracyError(scale * e.estimate(), scale * e.residual(), e.what());
    }
}

} // namespace

QuadResult integrate_left_power_weight(const Integrand& g, double lo, double hi, double beta,
                                       const QuadSettings& s) {
    return power_weighted(g, lo, hi, beta, true, s);
}

QuadResult integrate_right_power_weight(const Integrand& g, double lo, double hi, double beta,
                                        const QuadSettings& s) {
    return power_weighted(g, lo, hi, beta, false, s);
}

} // namespace fracineq
