#include "fracineq/error.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"
#include "fracineq/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace fracineq {
namespace {

constexpr QuadSettings kFactQuad{1e-13, 5000, 15};
constexpr int kHolderGrid = 101;

CheckReport fact_report(const std::string& id, const std::string& integrand, double alpha,
                        std::optional<double> alpha1 = std::nullopt) {
    CheckReport r;
    r.theorem_id = TheoremId::FACTS;
    r.identity = true;
    r.inputs.function_text = integrand;
    r.inputs.a = 0.0;
    r.inputs.b = 1.0;
    r.inputs.alpha = alpha;
    r.inputs.alpha1 = alpha1;
    std::string label = "fact " + id + " alpha = " + format_real(alpha);
    if (alpha1) label += ", alpha1 = " + format_real(*alpha1);
    r.notes.push_back(label);
    return r;
}

// Quadrature on the left, closed form (or a second route) on the right.
CheckReport equality_fact(const std::string& id, const std::string& integrand, double alpha,
                          std::optional<double> alpha1, double fact_tol, const std::function<double()>& lhs,
                          const std::function<double()>& rhs) {
    CheckReport r = fact_report(id, integrand, alpha, alpha1);
    try {
        r.lhs = lhs();
        r.rhs = rhs();
        r.margin = std::abs(r.lhs - r.rhs);
        r.status = r.margin <= fact_tol ? Status::Verified : Status::Violated;
    } catch (const Error& e) {
        r.lhs = r.rhs = r.margin = std::numeric_limits<double>::quiet_NaN();
        r.status = Status::Inconclusive;
        r.notes.push_back(std::string("quadrature failed: ") + e.what());
    }
    return r;
}

double pow2(double e) { return std::pow(2.0, e); }

} // namespace

std::vector<CheckReport> run_proof_fact_suite(const std::vector<double>& alpha_grid,
                                              const std::vector<double>& alpha1_grid, double fact_tol) {
    for (double a : alpha_grid)
        if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("alpha_grid", "orders must be finite and > 0");
    for (double a : alpha1_grid)
        if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("alpha1_grid", "orders must be finite and > 0");

    std::vector<CheckReport> out;
    for (double al : alpha_grid) {
        out.push_back(equality_fact(
            "i", "(1-t)^alpha t on [0, 1/2]", al, std::nullopt, fact_tol,
            [al] { return integrate([al](double t) { return std::pow(1.0 - t, al) * t; }, 0.0, 0.5, kFactQuad).value; },
            [al] {
                return 1.0 / ((al + 1.0) * (al + 2.0)) - (al + 3.0) / (pow2(al + 2.0) * (al + 1.0) * (al + 2.0));
            }));
        out.push_back(equality_fact(
            "ii", "t^(alpha+1) on [0, 1/2]", al, std::nullopt, fact_tol,
            [al] {
                return integrate_left_power_weight([](double) { return 1.0; }, 0.0, 0.5, al + 2.0, kFactQuad).value;
            },
            [al] { return 1.0 / (pow2(al + 2.0) * (al + 2.0)); }));
        out.push_back(equality_fact(
            "iii", "(1-t)^(alpha+1) on [0, 1/2]", al, std::nullopt, fact_tol,
            [al] { return integrate([al](double t) { return std::pow(1.0 - t, al + 1.0); }, 0.0, 0.5, kFactQuad).value; },
            [al] { return 1.0 / (al + 2.0) - 1.0 / (pow2(al + 2.0) * (al + 2.0)); }));
        out.push_back(equality_fact(
            "iv", "t^alpha (1-t) on [0, 1/2]", al, std::nullopt, fact_tol,
            [al] {
                return integrate_left_power_weight([](double t) { return 1.0 - t; }, 0.0, 0.5, al + 1.0, kFactQuad).value;
            },
            [al] { return (al + 3.0) / (pow2(al + 2.0) * (al + 1.0) * (al + 2.0)); }));
        out.push_back(equality_fact(
            "v", "|(1-t)^alpha - t^alpha| on [0, 1]", al, std::nullopt, fact_tol,
            [al] { return kink_integral([](double) { return 1.0; }, al, kFactQuad); },
            [al] { return 2.0 / (al + 1.0) * (1.0 - pow2(-al)); }));

        for (double a1 : alpha1_grid) {
            const auto lower = [al, a1] {
                return integrate_left_power_weight([al](double t) { return std::pow(1.0 - t, al); }, 0.0, 0.5, a1 + 1.0,
                                                   kFactQuad)
                    .value;
            };
            const auto upper = [al, a1] {
                return integrate_right_power_weight([a1](double t) { return std::pow(t, a1); }, 0.5, 1.0, al + 1.0,
                                                    kFactQuad)
                    .value;
            };
            out.push_back(equality_fact("vi-ib", "t^alpha1 (1-t)^alpha on [0, 1/2] vs incomplete beta", al, a1,
                                        fact_tol, lower,
                                        [al, a1] { return incomplete_beta(0.5, a1 + 1.0, al + 1.0).value; }));
            CheckReport sym = equality_fact("vi-sym", "t^alpha1 (1-t)^alpha on [0, 1/2] vs [1/2, 1]", al, a1,
                                            fact_tol, lower, upper);
            if (al != a1) {
                sym.informational = true;
                sym.notes.push_back("off-diagonal: the halves swap exponents under t -> 1-t, asymmetry expected");
            }
            out.push_back(std::move(sym));
        }

        if (al <= 1.0) {
            CheckReport r = fact_report("vii", "|t1^alpha - t2^alpha| - |t1 - t2|^alpha on a 101x101 grid", al);
            r.identity = false;
            double worst = -std::numeric_limits<double>::infinity();
            for (int i = 0; i < kHolderGrid; ++i) {
                const double t1 = static_cast<double>(i) / (kHolderGrid - 1);
                for (int j = 0; j < kHolderGrid; ++j) {
                    const double t2 = static_cast<double>(j) / (kHolderGrid - 1);
                    worst = std::max(worst, std::abs(std::pow(t1, al) - std::pow(t2, al)) - std::pow(std::abs(t1 - t2), al));
                }
            }
            r.lhs = worst;
            r.rhs = 0.0;
            r.margin = -worst;
            r.status = worst <= fact_tol ? Status::Verified : Status::Violated;
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace fracineq
