#pragma once

#include "fracineq/cli/rng.hpp"
#include "fracineq/cli/run_config.hpp"

#include <array>
#include <functional>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace fracineq::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitUnmet = 3;
inline constexpr int kExitInconclusive = 4;

int exit_code_for(Status s);

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_identities(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

// ---- fuzzing ----------------------------------------------------------------

/// Theorems exercised by every fuzz trial, in report order.
inline constexpr std::array<TheoremId, 14> kFuzzTheorems = {
    TheoremId::HH,    TheoremId::T1_1,  TheoremId::T1_2,  TheoremId::L1_1,  TheoremId::T2_1a,
    TheoremId::T2_1b, TheoremId::T2_2,  TheoremId::C2_1,  TheoremId::T2_3,  TheoremId::T3_1a,
    TheoremId::T3_1b, TheoremId::C3_1,  TheoremId::T3_2,  TheoremId::C3_2,
};

/// Theorems whose violated verdicts fail the run.
bool fuzz_sound(TheoremId id);

struct FuzzInstance {
    std::string function_text;
    double a = 0.0;
    double b = 1.0;
    double m = 1.0;
    double alpha = 1.0;
    double alpha1 = 1.0;
    double q = 1.0;

    CheckInputs inputs_for(TheoremId id) const;
};

/// Draws of trial `trial` (counters trial*64 + 0..):
///   0-2 c1..c3 in [0,5], each zeroed with probability 1/4 (draws 3-5)
///   6-7 p1, p2 in [1,4]; 8 lambda in [0.1,2]
///   9-10 interval end points in [0,3], gap at least 0.01
///   11 m in (0,1], set to 1 with probability 1/4 (draw 12)
///   13 alpha in (0,2]
///   14 alpha1 in (0,1], set to 1 with probability 1/4 (draw 15)
///   16 q in [1,4], set to 1 with probability 1/4 (draw 17)
FuzzInstance draw_instance(const CounterRng& rng, std::uint64_t trial);

inline constexpr std::size_t kStatusColumns = 5;  // four statuses plus not_applicable

struct FuzzSummary {
    std::uint64_t seed = 0;
    long trials = 0;
    int grid_n = 0;
    std::array<std::array<long, kStatusColumns>, kFuzzTheorems.size()> counts{};
    std::vector<CheckReport> minimum_margin;  // k smallest inequality margins
    std::vector<CheckReport> violations;      // every violated report, trial order
    std::vector<long> violation_trials;

    /// No violation among the sound theorems, and every violation of the
    /// (alpha1, m)-convex family carries its discrepancy note.
    bool sound() const;
};

inline constexpr std::size_t kMinimumMarginCount = 10;

/// Settings used when the caller did not override them: coarser grid and
/// early exit on the first violating grid point.
CheckSettings fuzz_defaults(const CheckSettings& s, bool grid_overridden);

FuzzSummary fuzz(std::uint64_t seed, long trials, const CheckSettings& s, unsigned threads);

void render_fuzz(std::ostream& out, const FuzzSummary& summary, const CheckSettings& s, OutputFormat format);

} // namespace fracineq::cli
