#include "fracineq/theorems.hpp"

#include "fracineq/error.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace fracineq {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::array<std::pair<TheoremId, std::string_view>, 15> kTheoremNames = {{
    {TheoremId::HH, "HH"},       {TheoremId::T1_1, "T1_1"},   {TheoremId::T1_2, "T1_2"},
    {TheoremId::L1_1, "L1_1"},   {TheoremId::T2_1a, "T2_1a"}, {TheoremId::T2_1b, "T2_1b"},
    {TheoremId::T2_2, "T2_2"},   {TheoremId::C2_1, "C2_1"},   {TheoremId::T2_3, "T2_3"},
    {TheoremId::T3_1a, "T3_1a"}, {TheoremId::T3_1b, "T3_1b"}, {TheoremId::C3_1, "C3_1"},
    {TheoremId::T3_2, "T3_2"},   {TheoremId::C3_2, "C3_2"},   {TheoremId::FACTS, "FACTS"},
}};

bool discrepancy_family(TheoremId id) {
    return id == TheoremId::T3_1a || id == TheoremId::T3_1b || id == TheoremId::C3_1 || id == TheoremId::T3_2 ||
           id == TheoremId::C3_2;
}

// ---- precondition helpers -------------------------------------------------

void require_interval(double a, double b) {
    if (!std::isfinite(a)) throw PreconditionError("a", "a must be finite");
    if (!std::isfinite(b)) throw PreconditionError("b", "b must be finite");
    if (!(a < b)) throw PreconditionError("b", "interval needs a < b");
}

void require_nonnegative_start(double a) {
    if (!(a >= 0.0)) throw PreconditionError("a", "a must be >= 0");
}

void require_m(double m) {
    if (!(m > 0.0 && m <= 1.0)) throw PreconditionError("m", "m must lie in (0, 1]");
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw PreconditionError("alpha", "alpha must be a finite number > 0");
}

void require_alpha_unit(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw PreconditionError("alpha", "alpha must lie in (0, 1] here");
}

void require_alpha1(double alpha1) {
    if (!(alpha1 > 0.0 && alpha1 <= 1.0)) throw PreconditionError("alpha1", "alpha1 must lie in (0, 1]");
}

void require_q(double q) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw PreconditionError("q", "q must be a finite number >= 1");
}

FunctionSpec derivative_of(const FunctionSpec& f) {
    try {
        return differentiate(f);
    } catch (const UnsupportedError& e) {
        throw PreconditionError("f", std::string("f must be differentiable: ") + e.what());
    }
}

std::string interval_text(double lo, double hi) { return "[" + format_real(lo) + ", " + format_real(hi) + "]"; }

// ---- report assembly ------------------------------------------------------

CheckReport make_report(TheoremId id, const FunctionSpec& f, double a, double b) {
    CheckReport r;
    r.theorem_id = id;
    r.lhs = r.rhs = r.margin = kNaN;
    r.inputs.function_text = f.to_string();
    r.inputs.a = a;
    r.inputs.b = b;
    return r;
}

// Runs certificates in order and stops at the first failure.
class Gate {
public:
    explicit Gate(CheckReport& r) : r_(r) {}

    template <typename Certify>
    bool require(std::string name, Certify&& certify) {
        if (!open_) return false;
        try {
            Certificate c = certify();
            const bool ok = c.holds;
            r_.hypotheses.push_back({std::move(name), std::move(c)});
            if (!ok) {
                r_.status = Status::HypothesesUnmet;
                open_ = false;
            }
        } catch (const EvalError& e) {
            r_.status = Status::Inconclusive;
            r_.notes.push_back("hypothesis '" + name + "' could not be evaluated: " + e.what());
            open_ = false;
        }
        return open_;
    }

    bool open() const { return open_; }

private:
    CheckReport& r_;
    bool open_ = true;
};

void finish_inequality(CheckReport& r, double lhs, double rhs, double check_tol) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        r.status = Status::Inconclusive;
        r.notes.push_back("non-finite side: lhs = " + format_real(lhs) + ", rhs = " + format_real(rhs));
        return;
    }
    r.status = r.margin >= -check_threshold(check_tol, lhs, rhs) ? Status::Verified : Status::Violated;
}

void finish_identity(CheckReport& r, double lhs, double rhs, double check_tol) {
    r.identity = true;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = std::abs(lhs - rhs);
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        r.status = Status::Inconclusive;
        r.notes.push_back("non-finite side");
        return;
    }
    r.status = r.margin <= check_threshold(check_tol, lhs, rhs) ? Status::Verified : Status::Violated;
}

// Adds replay and discrepancy notes once the verdict is known.
void annotate(CheckReport& r, const CheckSettings& s) {
    if (r.status != Status::Violated || r.informational) return;
    if (discrepancy_family(r.theorem_id))
        r.notes.push_back(std::string(kDiscrepancyTag) +
                          ": stated bound fails although every hypothesis certified on the grid");
    r.notes.push_back("replay: " + replay_command(r, s));
}

// Numeric failures after gating become inconclusive verdicts.
template <typename Body>
CheckReport guarded(CheckReport r, const CheckSettings& s, Body&& body) {
    try {
        body(r);
    } catch (const AccuracyError& e) {
        r.status = Status::Inconclusive;
        r.notes.push_back(std::string("quadrature did not converge: ") + e.what() +
                          " (estimate " + format_real(e.estimate()) + ", residual " + format_real(e.residual()) + ")");
    } catch (const EvalError& e) {
        r.status = Status::Inconclusive;
        r.notes.push_back(std::string("evaluation failed: ") + e.what());
    } catch (const DomainError& e) {
        r.status = Status::Inconclusive;
        r.notes.push_back(std::string("domain error: ") + e.what());
    }
    annotate(r, s);
    return r;
}

// Quadrature settings tightened so that `amplification * J` still meets abs_tol.
QuadSettings amplified(const QuadSettings& q, double amplification) {
    QuadSettings out = q;
    if (amplification > 1.0) out.abs_tol = q.abs_tol / amplification;
    return out;
}

// Γ(α)/(b-a)^α J_{a+}^α f(b)  or  Γ(α)/(b-a)^α J_{b-}^α f(a).
double normalized_rl(const FunctionSpec& f, double a, double b, double alpha, Side side, const QuadSettings& q) {
    const double factor = gamma(alpha).value * std::pow(b - a, -alpha);
    const QuadSettings tight = amplified(q, factor);
    const FracParams p{alpha, a, b};
    const double j = side == Side::Left ? rl_left(f, p, b, tight) : rl_right(f, p, a, tight);
    return factor * j;
}

double mean_value(const FunctionSpec& f, double lo, double hi, const QuadSettings& q) {
    return integrate(f, lo, hi, amplified(q, 1.0 / (hi - lo))).value / (hi - lo);
}

// Hölder/m-convexity endpoint terms |f'(a)| and |f'(b/m)|.
struct SlopeTerms {
    double at_a;
    double at_b_over_m;
};

SlopeTerms slope_terms(const FunctionSpec& df, double a, double b, double m) {
    return {std::abs(df(a)), std::abs(df(b / m))};
}

void note_k_m_membership(CheckReport& r, const FunctionSpec& f) {
    try {
        const double f0 = f(0.0);
        r.notes.push_back(std::string("K_m(b) membership f(0) <= 0: ") + (f0 <= 0.0 ? "yes" : "no") +
                          " (f(0) = " + format_real(f0) + ")");
    } catch (const EvalError&) {
        r.notes.push_back("K_m(b) membership f(0) <= 0: undefined (f not evaluable at 0)");
    }
}

// Hypothesis names
std::string m_convex_name(const std::string& what, double m, double hi) {
    return what + " m-convex (m = " + format_real(m) + ") on " + interval_text(0.0, hi);
}

std::string am_convex_name(const std::string& what, double alpha1, double m, double hi) {
    return what + " (alpha1, m)-convex (alpha1 = " + format_real(alpha1) + ", m = " + format_real(m) + ") on " +
           interval_text(0.0, hi);
}

} // namespace

// ---- names ------------------------------------------------------------------

std::string to_string(TheoremId id) {
    for (const auto& [k, name] : kTheoremNames)
        if (k == id) return std::string(name);
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (const auto& [k, n] : kTheoremNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string to_string(Status s) {
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Violated: return "violated";
    case Status::HypothesesUnmet: return "hypotheses_unmet";
    case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

double check_threshold(double check_tol, double lhs, double rhs) {
    return check_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double trapezoid_defect(const FunctionSpec& f, double a, double b, double alpha, const QuadSettings& s) {
    const double factor = gamma(alpha + 1.0).value / (2.0 * std::pow(b - a, alpha));
    const QuadSettings tight = amplified(s, 2.0 * factor);
    const FracParams p{alpha, a, b};
    const double sum = rl_left(f, p, b, tight) + rl_right(f, p, a, tight);
    return 0.5 * (f(a) + f(b)) - factor * sum;
}

// ---- classical and m-convex mean bounds -------------------------------------

CheckReport check_hh_classical(const FunctionSpec& f, double a, double b, const CheckSettings& s) {
    require_interval(a, b);
    CheckReport r = make_report(TheoremId::HH, f, a, b);
    Gate gate(r);
    if (!gate.require("f convex on " + interval_text(a, b),
                      [&] { return certify_class(f, a, b, 1.0, 1.0, s.cert); }))
        return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double mid = f(0.5 * (a + b));
        const double mean = mean_value(f, a, b, s.quad);
        const double avg = 0.5 * (f(a) + f(b));
        rep.parts = {{"midpoint <= mean", mid, mean}, {"mean <= endpoint average", mean, avg}};
        if (mean - mid <= avg - mean)
            finish_inequality(rep, mid, mean, s.check_tol);
        else
            finish_inequality(rep, mean, avg, s.check_tol);
    });
}

CheckReport check_thm_1_1(const FunctionSpec& f, double a, double b, double m, const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    CheckReport r = make_report(TheoremId::T1_1, f, a, b);
    r.inputs.m = m;
    Gate gate(r);
    if (!gate.require(m_convex_name("f", m, b / m), [&] { return certify_m_convex(f, b / m, m, s.cert); })) return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double mean = mean_value(f, a, b, s.quad);
        const double first = 0.5 * (f(a) + m * f(b / m));
        const double second = 0.5 * (f(b) + m * f(a / m));
        rep.parts = {{"(f(a) + m f(b/m))/2", mean, first}, {"(f(b) + m f(a/m))/2", mean, second}};
        finish_inequality(rep, mean, std::min(first, second), s.check_tol);
    });
}

CheckReport check_thm_1_2(const FunctionSpec& f, double a, double b, double m, const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    if (!(m * b > a)) throw PreconditionError("m", "degenerate interval: needs m*b > a");
    CheckReport r = make_report(TheoremId::T1_2, f, a, b);
    r.inputs.m = m;
    Gate gate(r);
    if (!gate.require(m_convex_name("f", m, b), [&] { return certify_m_convex(f, b, m, s.cert); })) return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = (mean_value(f, a, m * b, s.quad) + mean_value(f, m * a, b, s.quad)) / (m + 1.0);
        finish_inequality(rep, lhs, 0.5 * (f(a) + f(b)), s.check_tol);
    });
}

// ---- trapezoid identity -----------------------------------------------------

CheckReport check_lemma_1_1(const FunctionSpec& f, double a, double b, double alpha, const CheckSettings& s) {
    require_interval(a, b);
    require_alpha(alpha);
    const FunctionSpec df = derivative_of(f);
    CheckReport r = make_report(TheoremId::L1_1, f, a, b);
    r.inputs.alpha = alpha;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = trapezoid_defect(f, a, b, alpha, s.quad);
        const double half = 0.5 * (b - a);
        const auto slope = [&](double t) { return df(t * a + (1.0 - t) * b); };
        const double rhs = half * signed_kink_integral(slope, alpha, amplified(s.quad, half));
        finish_identity(rep, lhs, rhs, s.check_tol);
    });
}

// ---- fractional bounds, m-convex --------------------------------------------

CheckReport check_thm_2_1_side(const FunctionSpec& f, double a, double b, double m, double alpha, Side side,
                               const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha(alpha);
    CheckReport r = make_report(side == Side::Left ? TheoremId::T2_1a : TheoremId::T2_1b, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    note_k_m_membership(r, f);
    Gate gate(r);
    if (!gate.require("f >= 0 on " + interval_text(a, b), [&] { return certify_nonnegative(f, a, b, s.cert.grid_n * 4, s.cert.tol); }))
        return r;
    if (!gate.require(m_convex_name("f", m, b / m), [&] { return certify_m_convex(f, b / m, m, s.cert); })) return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = normalized_rl(f, a, b, alpha, side, s.quad);
        const double weight = beta(alpha, 2.0).value;  // Γ(α)Γ(2)/Γ(α+2)
        const double rhs = side == Side::Left ? f(a) / (alpha + 1.0) + m * f(b / m) * weight
                                              : f(b) / (alpha + 1.0) + m * f(a / m) * weight;
        rep.parts = {{side == Side::Left ? "left-sided" : "right-sided", lhs, rhs}};
        finish_inequality(rep, lhs, rhs, s.check_tol);
    });
}

namespace {

CheckReport tighter_side(CheckReport left, CheckReport right) {
    const bool both_decided = (left.status == Status::Verified || left.status == Status::Violated) &&
                              (right.status == Status::Verified || right.status == Status::Violated);
    if (!both_decided) {
        // surface the side that did not reach a verdict
        if (left.status == Status::Verified || left.status == Status::Violated) return right;
        return left;
    }
    CheckReport& pick = right.margin < left.margin ? right : left;
    const CheckReport& other = right.margin < left.margin ? left : right;
    pick.parts.insert(pick.parts.end(), other.parts.begin(), other.parts.end());
    if (other.status == Status::Violated && pick.status != Status::Violated) pick.status = Status::Violated;
    for (const std::string& n : other.notes)
        if (std::find(pick.notes.begin(), pick.notes.end(), n) == pick.notes.end()) pick.notes.push_back(n);
    return std::move(pick);
}

} // namespace

CheckReport check_thm_2_1(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s) {
    return tighter_side(check_thm_2_1_side(f, a, b, m, alpha, Side::Left, s),
                        check_thm_2_1_side(f, a, b, m, alpha, Side::Right, s));
}

CheckReport check_thm_2_2(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha(alpha);
    require_q(q);
    const FunctionSpec df = derivative_of(f);
    const FunctionSpec slope_q = abs_power(df, q);
    CheckReport r = make_report(TheoremId::T2_2, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    r.inputs.q = q;
    Gate gate(r);
    if (!gate.require(m_convex_name("|f'|^q", m, b / m), [&] { return certify_m_convex(slope_q, b / m, m, s.cert); }))
        return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = std::abs(trapezoid_defect(f, a, b, alpha, s.quad));
        const SlopeTerms d = slope_terms(df, a, b, m);
        const double kernel = (std::pow(2.0, alpha) - 1.0) / (std::pow(2.0, alpha) * (alpha + 1.0));
        const double rhs = 0.5 * (b - a) * std::pow(2.0, 1.0 - 1.0 / q) * kernel *
                           std::pow(std::pow(d.at_a, q) + m * std::pow(d.at_b_over_m, q), 1.0 / q);
        finish_inequality(rep, lhs, rhs, s.check_tol);
    });
}

CheckReport check_cor_2_1(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha_unit(alpha);
    require_q(q);
    if (!(q > 1.0)) throw PreconditionError("q", "q must be > 1: the conjugate exponent p is undefined at q = 1");
    const ClassParams cls = ClassParams::make(m, 1.0, q);
    const FunctionSpec df = derivative_of(f);
    const FunctionSpec slope_q = abs_power(df, q);
    CheckReport r = make_report(TheoremId::C2_1, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    r.inputs.q = q;
    r.notes.push_back("conjugate exponent p = q/(q-1) = " + format_real(cls.p()));
    Gate gate(r);
    if (!gate.require(m_convex_name("|f'|^q", m, b / m), [&] { return certify_m_convex(slope_q, b / m, m, s.cert); }))
        return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double p = cls.p();
        const double lhs = std::abs(trapezoid_defect(f, a, b, alpha, s.quad));
        const SlopeTerms d = slope_terms(df, a, b, m);
        const double rhs = 0.5 * (b - a) * std::pow(1.0 / (alpha * p + 1.0), 1.0 / p) *
                           std::pow(0.5 * (std::pow(d.at_a, q) + m * std::pow(d.at_b_over_m, q)), 1.0 / q);
        finish_inequality(rep, lhs, rhs, s.check_tol);
    });
}

CheckReport check_thm_2_3(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha(alpha);
    CheckReport r = make_report(TheoremId::T2_3, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    r.notes.push_back(
        "statement writes every operator at f(mb); checked with the anchors forced by the substitutions: "
        "A = J_{a+}^alpha f(mb), B = J_{(mb)-}^alpha f(a), C = J_{b-}^alpha f(ma), D = J_{(ma)+}^alpha f(b)");
    Gate gate(r);
    if (!gate.require(m_convex_name("f", m, b), [&] { return certify_m_convex(f, b, m, s.cert); })) return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double inv = 1.0 / (m + 1.0);
        double direct = 0.0;
        double via_rl = 0.0;
        for (Orientation o : {Orientation::A, Orientation::B, Orientation::C, Orientation::D}) {
            const double tm = t_moment(f, a, b, m, alpha, o, s.quad);
            const double rl = t_moment_via_rl(f, a, b, m, alpha, o, s.quad);
            rep.parts.push_back({"orientation " + to_string(o) + " (" + rl_anchor(o) + ")", inv * tm, inv * rl});
            direct += tm;
            via_rl += rl;
        }
        direct *= inv;
        via_rl *= inv;
        const double residual = std::abs(direct - via_rl);
        rep.notes.push_back("t-moment vs RL route residual = " + format_real(residual));
        finish_inequality(rep, direct, (f(a) + f(b)) / alpha, s.check_tol);
        if (residual > check_threshold(s.check_tol, direct, via_rl)) {
            rep.status = Status::Inconclusive;
            rep.notes.push_back("lhs routes disagree beyond check_tol");
        }
    });
}

// ---- fractional bounds, (α₁, m)-convex ----------------------------------------

namespace {

CheckReport alpha_m_side(TheoremId id, const FunctionSpec& f, double a, double b, double m, double alpha,
                         double alpha1, Side side, const CheckSettings& s) {
    CheckReport r = make_report(id, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    if (id != TheoremId::C3_1) r.inputs.alpha1 = alpha1;
    Gate gate(r);
    if (!gate.require("f >= 0 on " + interval_text(a, b),
                      [&] { return certify_nonnegative(f, a, b, s.cert.grid_n * 4, s.cert.tol); }))
        return r;
    const ClassParams cls = ClassParams::make(m, alpha1);
    if (!gate.require(am_convex_name("f", alpha1, m, b / m),
                      [&] { return certify_alpha_m_convex(f, b / m, cls, s.cert); }))
        return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = normalized_rl(f, a, b, alpha, side, s.quad);
        const double near = side == Side::Left ? f(a) : f(b);
        const double far = side == Side::Left ? f(b / m) : f(a / m);
        double rhs = 0.0;
        if (id == TheoremId::C3_1) {
            rhs = (near + m * far) / (2.0 * alpha);
        } else {
            rhs = near / (alpha + alpha1) + m * alpha1 / (alpha * (alpha + alpha1)) * far;
            if (alpha1 == 1.0) {
                const double m_convex_rhs = near / (alpha + 1.0) + m * far * beta(alpha, 2.0).value;
                rep.notes.push_back("alpha1 = 1 agreement with the m-convex bound: |diff| = " +
                                    format_real(std::abs(rhs - m_convex_rhs)));
            }
        }
        rep.parts = {{side == Side::Left ? "left-sided" : "right-sided", lhs, rhs}};
        finish_inequality(rep, lhs, rhs, s.check_tol);
    });
}

} // namespace

CheckReport check_thm_3_1_side(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1,
                               Side side, const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha(alpha);
    require_alpha1(alpha1);
    return alpha_m_side(side == Side::Left ? TheoremId::T3_1a : TheoremId::T3_1b, f, a, b, m, alpha, alpha1, side, s);
}

CheckReport check_thm_3_1(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1,
                          const CheckSettings& s) {
    return tighter_side(check_thm_3_1_side(f, a, b, m, alpha, alpha1, Side::Left, s),
                        check_thm_3_1_side(f, a, b, m, alpha, alpha1, Side::Right, s));
}

CheckReport check_cor_3_1(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha_unit(alpha);
    return tighter_side(alpha_m_side(TheoremId::C3_1, f, a, b, m, alpha, alpha, Side::Left, s),
                        alpha_m_side(TheoremId::C3_1, f, a, b, m, alpha, alpha, Side::Right, s));
}

double KinkMoment::deviation() const { return std::abs(quadrature - closed_form); }

KinkMoment kink_moment(double alpha, double alpha1, const QuadSettings& s) {
    const double sum = alpha + alpha1;
    KinkMoment k;
    k.quadrature = kink_integral([alpha1](double t) { return std::pow(t, alpha1); }, alpha, s);
    k.incomplete_beta = 2.0 * incomplete_beta(0.5, alpha1 + 1.0, alpha + 1.0).value -
                        beta(alpha1 + 1.0, alpha + 1.0).value + (1.0 - std::pow(2.0, -sum)) / (sum + 1.0);
    k.closed_form = (std::pow(2.0, sum) - 1.0) / (std::pow(2.0, sum) * (sum + 1.0));
    return k;
}

namespace {

CheckReport decreasing_slope_bound(TheoremId id, const FunctionSpec& f, double a, double b, double m, double alpha,
                                   double alpha1, double q, const CheckSettings& s) {
    const FunctionSpec df = derivative_of(f);
    const FunctionSpec slope_q = abs_power(df, q);
    CheckReport r = make_report(id, f, a, b);
    r.inputs.m = m;
    r.inputs.alpha = alpha;
    if (id == TheoremId::T3_2) r.inputs.alpha1 = alpha1;
    r.inputs.q = q;

    const KinkMoment km = kink_moment(alpha, alpha1, s.quad);
    r.notes.push_back("D(alpha, alpha1) = " + format_real(km.deviation()) + " (weighted kink moment " +
                      format_real(km.quadrature) + " vs stated constant " + format_real(km.closed_form) +
                      "; incomplete-Beta reconstruction residual " +
                      format_real(std::abs(km.quadrature - km.incomplete_beta)) + ")");

    Gate gate(r);
    if (!gate.require("|f'| decreasing on " + interval_text(a, b),
                      [&] { return certify_decreasing_abs_derivative(f, a, b, s.monotone_grid_n, s.cert.tol); }))
        return r;
    const ClassParams cls = ClassParams::make(m, alpha1, q);
    if (!gate.require(am_convex_name("|f'|^q", alpha1, m, b / m),
                      [&] { return certify_alpha_m_convex(slope_q, b / m, cls, s.cert); }))
        return r;
    return guarded(std::move(r), s, [&](CheckReport& rep) {
        const double lhs = std::abs(trapezoid_defect(f, a, b, alpha, s.quad));
        const SlopeTerms d = slope_terms(df, a, b, m);
        const double sum = alpha + alpha1;
        const double weighted = (std::pow(2.0, sum) - 1.0) / (std::pow(2.0, sum) * (sum + 1.0));
        const double kernel = (std::pow(2.0, alpha) - 1.0) / (std::pow(2.0, alpha - 1.0) * (alpha + 1.0));
        const double aq = std::pow(d.at_a, q);
        const double bq = std::pow(d.at_b_over_m, q);
        const double bracket =
            weighted * (aq - m * bq) + m / (alpha + 1.0) * bq * (1.0 - std::pow(2.0, -alpha));
        if (bracket < 0.0 && q != 1.0)
            rep.notes.push_back("bracket of the bound is negative (" + format_real(bracket) + "); rhs undefined");
        const double rhs = 0.5 * (b - a) * std::pow(kernel, (q - 1.0) / q) *
                           (q == 1.0 ? bracket : std::pow(bracket, 1.0 / q));
        finish_inequality(rep, lhs, rhs, s.check_tol);
        if (id == TheoremId::C3_2 && km.deviation() > s.check_tol) {
            rep.status = Status::Inconclusive;
            rep.notes.push_back("diagonal kink moment deviates from its closed form beyond check_tol");
        }
    });
}

} // namespace

CheckReport check_thm_3_2(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1, double q,
                          const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha(alpha);
    require_alpha1(alpha1);
    require_q(q);
    return decreasing_slope_bound(TheoremId::T3_2, f, a, b, m, alpha, alpha1, q, s);
}

CheckReport check_cor_3_2(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s) {
    require_interval(a, b);
    require_nonnegative_start(a);
    require_m(m);
    require_alpha_unit(alpha);
    require_q(q);
    return decreasing_slope_bound(TheoremId::C3_2, f, a, b, m, alpha, alpha, q, s);
}

// ---- dispatch -------------------------------------------------------------

ParameterUse parameters_of(TheoremId id) {
    switch (id) {
    case TheoremId::HH: return {};
    case TheoremId::T1_1:
    case TheoremId::T1_2: return {true, false, false, false};
    case TheoremId::L1_1: return {false, true, false, false};
    case TheoremId::T2_1a:
    case TheoremId::T2_1b:
    case TheoremId::T2_3:
    case TheoremId::C3_1: return {true, true, false, false};
    case TheoremId::T2_2:
    case TheoremId::C2_1:
    case TheoremId::C3_2: return {true, true, false, true};
    case TheoremId::T3_1a:
    case TheoremId::T3_1b: return {true, true, true, false};
    case TheoremId::T3_2: return {true, true, true, true};
    case TheoremId::FACTS: return {};
    }
    return {};
}

CheckReport run_theorem(TheoremId id, const FunctionSpec& f, const CheckInputs& in, const CheckSettings& s) {
    const ParameterUse use = parameters_of(id);
    const auto need = [](const std::optional<double>& v, const char* name) {
        if (!v) throw PreconditionError(name, std::string("parameter '") + name + "' is required");
        return *v;
    };
    const double m = use.m ? need(in.m, "m") : 1.0;
    const double alpha = use.alpha ? need(in.alpha, "alpha") : 1.0;
    const double alpha1 = use.alpha1 ? need(in.alpha1, "alpha1") : 1.0;
    const double q = use.q ? need(in.q, "q") : 1.0;
    switch (id) {
    case TheoremId::HH: return check_hh_classical(f, in.a, in.b, s);
    case TheoremId::T1_1: return check_thm_1_1(f, in.a, in.b, m, s);
    case TheoremId::T1_2: return check_thm_1_2(f, in.a, in.b, m, s);
    case TheoremId::L1_1: return check_lemma_1_1(f, in.a, in.b, alpha, s);
    case TheoremId::T2_1a: return check_thm_2_1_side(f, in.a, in.b, m, alpha, Side::Left, s);
    case TheoremId::T2_1b: return check_thm_2_1_side(f, in.a, in.b, m, alpha, Side::Right, s);
    case TheoremId::T2_2: return check_thm_2_2(f, in.a, in.b, m, alpha, q, s);
    case TheoremId::C2_1: return check_cor_2_1(f, in.a, in.b, m, alpha, q, s);
    case TheoremId::T2_3: return check_thm_2_3(f, in.a, in.b, m, alpha, s);
    case TheoremId::T3_1a: return check_thm_3_1_side(f, in.a, in.b, m, alpha, alpha1, Side::Left, s);
    case TheoremId::T3_1b: return check_thm_3_1_side(f, in.a, in.b, m, alpha, alpha1, Side::Right, s);
    case TheoremId::C3_1: return check_cor_3_1(f, in.a, in.b, m, alpha, s);
    case TheoremId::T3_2: return check_thm_3_2(f, in.a, in.b, m, alpha, alpha1, q, s);
    case TheoremId::C3_2: return check_cor_3_2(f, in.a, in.b, m, alpha, q, s);
    case TheoremId::FACTS: break;
    }
    throw PreconditionError("theorem", "FACTS is run by the identities suite, not as a single check");
}

std::string replay_command(const CheckReport& r, const CheckSettings& s) {
    std::string cmd = "fracineq check --theorem " + to_string(r.theorem_id) + " --f \"" + r.inputs.function_text +
                      "\" --a " + format_real(r.inputs.a) + " --b " + format_real(r.inputs.b);
    const auto opt = [&cmd](const char* flag, const std::optional<double>& v) {
        if (v) cmd += std::string(" --") + flag + " " + format_real(*v);
    };
    opt("m", r.inputs.m);
    opt("alpha", r.inputs.alpha);
    opt("alpha1", r.inputs.alpha1);
    opt("q", r.inputs.q);
    const CheckSettings d;
    if (s.quad.abs_tol != d.quad.abs_tol) cmd += " --abs-tol " + format_real(s.quad.abs_tol);
    if (s.quad.max_subdivisions != d.quad.max_subdivisions)
        cmd += " --max-subdivisions " + std::to_string(s.quad.max_subdivisions);
    if (s.quad.panel_order != d.quad.panel_order) cmd += " --panel-order " + std::to_string(s.quad.panel_order);
    if (s.cert.grid_n != d.cert.grid_n) cmd += " --grid-n " + std::to_string(s.cert.grid_n);
    if (s.cert.tol != d.cert.tol) cmd += " --cert-tol " + format_real(s.cert.tol);
    if (s.check_tol != d.check_tol) cmd += " --check-tol " + format_real(s.check_tol);
    if (s.monotone_grid_n != d.monotone_grid_n) cmd += " --monotone-grid-n " + std::to_string(s.monotone_grid_n);
    return cmd;
}

} // namespace fracineq
