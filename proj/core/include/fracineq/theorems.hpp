#pragma once

// One checker per inequality or identity. Every checker validates its
// preconditions (PreconditionError), certifies the hypothesis classes on a
// grid, short-circuits to hypotheses_unmet on the first failed certificate,
// and only then evaluates both sides independently.

#include "fracineq/convexity.hpp"
#include "fracineq/expr.hpp"
#include "fracineq/quadrature.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracineq {

enum class TheoremId {
    HH,     // classical Hermite-Hadamard
    T1_1,   // m-convex mean bound with min of two averages
    T1_2,   // m-convex two-interval mean bound
    L1_1,   // fractional trapezoid identity
    T2_1a,  // left-sided RL bound, m-convex
    T2_1b,  // right-sided RL bound, m-convex
    T2_2,   // trapezoid defect bound, |f'|^q m-convex
    C2_1,   // Hölder-conjugate variant of T2_2
    T2_3,   // four-orientation RL sum bound
    T3_1a,  // left-sided RL bound, (α₁,m)-convex
    T3_1b,  // right-sided RL bound, (α₁,m)-convex
    C3_1,   // T3_1 with α = α₁
    T3_2,   // trapezoid defect bound, |f'|^q (α₁,m)-convex, |f'| decreasing
    C3_2,   // T3_2 with α = α₁
    FACTS,  // closed-form integral facts used in the proofs
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

enum class Status { Verified, Violated, HypothesesUnmet, Inconclusive };

std::string to_string(Status s);

struct Hypothesis {
    std::string name;
    Certificate certificate;
};

/// Parameters a report was produced from; enough to replay it.
struct CheckInputs {
    std::string function_text;
    double a = 0.0;
    double b = 1.0;
    std::optional<double> m;
    std::optional<double> alpha;
    std::optional<double> alpha1;
    std::optional<double> q;
};

/// One side of a multi-part inequality (both Hermite-Hadamard halves, both
/// one-sided RL bounds, both averages of the min).
struct ReportPart {
    std::string label;
    double lhs;
    double rhs;
};

struct CheckReport {
    TheoremId theorem_id = TheoremId::HH;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs, or |lhs - rhs| for identities
    Status status = Status::Inconclusive;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> notes;
    std::vector<ReportPart> parts;
    CheckInputs inputs;
    bool identity = false;       // margin is a residual, not a slack
    bool informational = false;  // a non-verified status here is expected, not a failure
};

struct CheckSettings {
    QuadSettings quad;
    CertSettings cert;
    double check_tol = 1e-8;
    int monotone_grid_n = 256;  // grid for the decreasing-|f'| certificate
};

/// Threshold applied to a margin whose sides have the given magnitudes:
/// check_tol * max(1, |lhs|, |rhs|).
double check_threshold(double check_tol, double lhs, double rhs);

/// Note prefix attached to violated verdicts of the (α₁,m)-convex family.
inline constexpr std::string_view kDiscrepancyTag = "paper-discrepancy-candidate";

/// The trapezoid defect (f(a)+f(b))/2 - Γ(α+1)/(2(b-a)^α) [J_{a+}^α f(b) + J_{b-}^α f(a)].
double trapezoid_defect(const FunctionSpec& f, double a, double b, double alpha, const QuadSettings& s);

CheckReport check_hh_classical(const FunctionSpec& f, double a, double b, const CheckSettings& s);
CheckReport check_thm_1_1(const FunctionSpec& f, double a, double b, double m, const CheckSettings& s);
CheckReport check_thm_1_2(const FunctionSpec& f, double a, double b, double m, const CheckSettings& s);
CheckReport check_lemma_1_1(const FunctionSpec& f, double a, double b, double alpha, const CheckSettings& s);

enum class Side { Left, Right };

/// Both one-sided bounds; the report carries the side with the smaller margin
/// (id T2_1a or T2_1b) and lists both in `parts`.
CheckReport check_thm_2_1(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s);
CheckReport check_thm_2_1_side(const FunctionSpec& f, double a, double b, double m, double alpha, Side side,
                               const CheckSettings& s);
CheckReport check_thm_2_2(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s);
CheckReport check_cor_2_1(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s);
CheckReport check_thm_2_3(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s);
CheckReport check_thm_3_1(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1,
                          const CheckSettings& s);
CheckReport check_thm_3_1_side(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1,
                               Side side, const CheckSettings& s);
CheckReport check_cor_3_1(const FunctionSpec& f, double a, double b, double m, double alpha, const CheckSettings& s);
CheckReport check_thm_3_2(const FunctionSpec& f, double a, double b, double m, double alpha, double alpha1, double q,
                          const CheckSettings& s);
CheckReport check_cor_3_2(const FunctionSpec& f, double a, double b, double m, double alpha, double q,
                          const CheckSettings& s);

/// The weighted kink moment ∫_0^1 |(1-t)^α - t^α| t^α₁ dt three ways.
struct KinkMoment {
    double quadrature;      // direct split-at-kink quadrature
    double incomplete_beta; // 2 β(1/2; α₁+1, α+1) - β(α₁+1, α+1) + (1 - 2^-(α+α₁))/(α+α₁+1)
    double closed_form;     // (2^(α+α₁) - 1) / (2^(α+α₁) (α+α₁+1)), exact only when α = α₁
    double deviation() const; // D(α, α₁) = |quadrature - closed_form|
};
KinkMoment kink_moment(double alpha, double alpha1, const QuadSettings& s);

/// Facts (i)-(vii) over the given grids. Fact (vi)'s half-interval symmetry
/// entries are marked informational.
std::vector<CheckReport> run_proof_fact_suite(const std::vector<double>& alpha_grid,
                                              const std::vector<double>& alpha1_grid, double fact_tol = 1e-10);

/// Which of m, alpha, alpha1, q a theorem consumes (a, b and f always).
struct ParameterUse {
    bool m = false;
    bool alpha = false;
    bool alpha1 = false;
    bool q = false;
};
ParameterUse parameters_of(TheoremId id);

/// Dispatch by id. T2_1a/T2_1b and T3_1a/T3_1b run a single side.
/// Throws PreconditionError when a required parameter is missing.
CheckReport run_theorem(TheoremId id, const FunctionSpec& f, const CheckInputs& in, const CheckSettings& s);

/// Shell command that reproduces the report with the `fracineq` tool.
std::string replay_command(const CheckReport& r, const CheckSettings& s);

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double v);

} // namespace fracineq
