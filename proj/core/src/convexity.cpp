#include "fracineq/convexity.hpp"

#include "fracineq/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace fracineq {

ClassParams ClassParams::make(double m, double alpha1, double q) {
    if (!(m > 0.0 && m <= 1.0)) throw PreconditionError("m", "m must lie in (0, 1]");
    if (!(alpha1 > 0.0 && alpha1 <= 1.0)) throw PreconditionError("alpha1", "alpha1 must lie in (0, 1]");
    if (!(q >= 1.0) || !std::isfinite(q)) throw PreconditionError("q", "q must be a finite number >= 1");
    return ClassParams(m, alpha1, q);
}

double ClassParams::p() const noexcept {
    if (q_ == 1.0) return std::numeric_limits<double>::infinity();
    return q_ / (q_ - 1.0);
}

double violation_threshold(double tol, double scale) { return tol * std::max(1.0, scale); }

double class_defect(const FunctionSpec& f, double m, double alpha1, double x, double y, double t) {
    const double w = std::pow(t, alpha1);
    return f(t * x + m * (1.0 - t) * y) - (w * f(x) + m * (1.0 - w) * f(y));
}

namespace {

struct Point {
    double x, y, t;
};

struct PointEval {
    double defect;
    double scale;

    bool violates(double tol) const { return defect > violation_threshold(tol, scale); }
    double normalized() const { return defect / std::max(1.0, scale); }
};

class ClassProbe {
public:
    ClassProbe(const FunctionSpec& f, double lo, double hi, double m, double alpha1)
        : f_(f), lo_(lo), hi_(hi), m_(m), alpha1_(alpha1) {}

    PointEval at(const Point& p) const {
        const double w = std::pow(p.t, alpha1_);
        return combine(f_(p.t * p.x + m_ * (1.0 - p.t) * p.y), w * f_(p.x), m_ * (1.0 - w) * f_(p.y));
    }

    static PointEval combine(double lhs, double first, double second) {
        const double scale = std::max({std::abs(lhs), std::abs(first), std::abs(second)});
        return {lhs - (first + second), scale};
    }

    Point clamp(Point p) const {
        p.x = std::clamp(p.x, lo_, hi_);
        p.y = std::clamp(p.y, lo_, hi_);
        p.t = std::clamp(p.t, 0.0, 1.0);
        return p;
    }

    // Compass search maximizing `objective`, started one half grid cell wide.
    template <typename Objective>
    Point climb(Point start, double step_xy, double step_t, Objective&& objective) const {
        Point best = start;
        double best_value = objective(at(best));
        double hxy = 0.5 * step_xy;
        double ht = 0.5 * step_t;
        for (int iter = 0; iter < 200 && (hxy > 1e-13 * (1.0 + std::abs(hi_)) || ht > 1e-13); ++iter) {
            bool improved = false;
            const std::array<Point, 6> moves = {{{hxy, 0, 0}, {-hxy, 0, 0}, {0, hxy, 0},
                                                 {0, -hxy, 0}, {0, 0, ht}, {0, 0, -ht}}};
            for (const Point& d : moves) {
                const Point cand = clamp({best.x + d.x, best.y + d.y, best.t + d.t});
                const double v = objective(at(cand));
                if (v > best_value) {
                    best = cand;
                    best_value = v;
                    improved = true;
                }
            }
            if (!improved) {
                hxy *= 0.5;
                ht *= 0.5;
            }
        }
        return best;
    }

private:
    const FunctionSpec& f_;
    double lo_, hi_, m_, alpha1_;
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    v.back() = hi;
    return v;
}

void check_settings(const CertSettings& s) {
    if (s.grid_n < 2) throw PreconditionError("grid_n", "grid_n must be at least 2");
    if (!(s.tol >= 0.0)) throw PreconditionError("tol", "certification tolerance must be >= 0");
}

} // namespace

Certificate certify_class(const FunctionSpec& f, double lo, double hi, double m, double alpha1,
                          const CertSettings& s) {
    check_settings(s);
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw PreconditionError("domain", "certification domain must be a finite interval");

    const ClassProbe probe(f, lo, hi, m, alpha1);
    const std::vector<double> xs = linspace(lo, hi, s.grid_n);
    const std::vector<double> ts = linspace(0.0, 1.0, s.grid_n);
    std::vector<double> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
    std::vector<double> ws(ts.size());
    for (std::size_t k = 0; k < ts.size(); ++k) ws[k] = std::pow(ts[k], alpha1);

    Certificate cert;
    cert.max_violation = -std::numeric_limits<double>::infinity();
    bool have_violator = false;
    Point violator{};
    double violator_defect = -std::numeric_limits<double>::infinity();
    Point worst_normalized{};
    double worst_normalized_value = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            for (std::size_t k = 0; k < ts.size(); ++k) {
                const double t = ts[k];
                const double w = ws[k];
                const PointEval e = ClassProbe::combine(f(t * xs[i] + m * (1.0 - t) * xs[j]), w * fx[i],
                                                        m * (1.0 - w) * fx[j]);
                ++cert.grid_size;
                cert.max_violation = std::max(cert.max_violation, e.defect);
                if (e.normalized() > worst_normalized_value) {
                    worst_normalized_value = e.normalized();
                    worst_normalized = {xs[i], xs[j], t};
                }
                if (e.violates(s.tol) && e.defect > violator_defect) {
                    have_violator = true;
                    violator_defect = e.defect;
                    violator = {xs[i], xs[j], t};
                    if (s.stop_at_first_violation) goto scanned;
                }
            }
        }
    }
scanned:
    const double step_xy = s.grid_n > 1 ? (hi - lo) / (s.grid_n - 1) : 0.0;
    const double step_t = 1.0 / (s.grid_n - 1);

    if (!have_violator) {
        const Point p = probe.climb(worst_normalized, step_xy, step_t, [](const PointEval& e) { return e.normalized(); });
        const PointEval e = probe.at(p);
        cert.max_violation = std::max(cert.max_violation, e.defect);
        if (!e.violates(s.tol)) return cert;
        violator = p;
    } else if (!s.stop_at_first_violation) {
        const Point p = probe.climb(violator, step_xy, step_t, [](const PointEval& e) { return e.defect; });
        const PointEval e = probe.at(p);
        if (e.violates(s.tol)) violator = p;
    }

    // re-evaluate the witness through the plain defect formula
    const double defect = class_defect(f, m, alpha1, violator.x, violator.y, violator.t);
    cert.holds = false;
    cert.witness = Witness{violator.x, violator.y, violator.t, defect};
    cert.max_violation = std::max(cert.max_violation, defect);
    return cert;
}

Certificate certify_m_convex(const FunctionSpec& f, double B, double m, int grid_n, double tol) {
    return certify_m_convex(f, B, m, CertSettings{grid_n, tol, false});
}

Certificate certify_m_convex(const FunctionSpec& f, double B, double m, const CertSettings& s) {
    if (!(B > 0.0)) throw PreconditionError("B", "domain bound B must be > 0");
    if (!(m > 0.0 && m <= 1.0)) throw PreconditionError("m", "m must lie in (0, 1]");
    return certify_class(f, 0.0, B, m, 1.0, s);
}

Certificate certify_alpha_m_convex(const FunctionSpec& f, double B, const ClassParams& params, int grid_n,
                                   double tol) {
    return certify_alpha_m_convex(f, B, params, CertSettings{grid_n, tol, false});
}

Certificate certify_alpha_m_convex(const FunctionSpec& f, double B, const ClassParams& params,
                                   const CertSettings& s) {
    if (!(B > 0.0)) throw PreconditionError("B", "domain bound B must be > 0");
    return certify_class(f, 0.0, B, params.m(), params.alpha1(), s);
}

Certificate certify_decreasing_abs_derivative(const FunctionSpec& f, double a, double b, int grid_n, double tol) {
    check_settings(CertSettings{grid_n, tol, false});
    if (!(a < b)) throw PreconditionError("a", "interval needs a < b");
    const FunctionSpec df = differentiate(f);
    const std::vector<double> xs = linspace(a, b, grid_n);
    Certificate cert;
    cert.max_violation = -std::numeric_limits<double>::infinity();
    double prev = std::abs(df(xs[0]));
    cert.grid_size = 1;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = std::abs(df(xs[i]));
        ++cert.grid_size;
        const double rise = cur - prev;
        cert.max_violation = std::max(cert.max_violation, rise);
        if (cert.holds && rise > violation_threshold(tol, std::max(cur, prev))) {
            cert.holds = false;
            cert.witness = Witness{xs[i - 1], xs[i], 0.0, rise};
        }
        prev = cur;
    }
    return cert;
}

Certificate certify_nonnegative(const FunctionSpec& f, double a, double b, int grid_n, double tol) {
    check_settings(CertSettings{grid_n, tol, false});
    if (!(a <= b)) throw PreconditionError("a", "interval needs a <= b");
    Certificate cert;
    cert.max_violation = -std::numeric_limits<double>::infinity();
    for (double x : linspace(a, b, grid_n)) {
        const double v = f(x);
        ++cert.grid_size;
        cert.max_violation = std::max(cert.max_violation, -v);
        if (-v > tol && (!cert.witness || -v > cert.witness->defect)) {
            cert.holds = false;
            cert.witness = Witness{x, x, 0.0, -v};
        }
    }
    return cert;
}

} // namespace fracineq
