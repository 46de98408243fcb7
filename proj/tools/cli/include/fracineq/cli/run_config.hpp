#pragma once

#include "fracineq/theorems.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracineq::cli {

enum class Command { Check, Sweep, Fuzz, Identities };
enum class OutputFormat { Text, JsonLines, Csv };

std::optional<OutputFormat> format_from_string(std::string_view s);

/// Bad flags, bad ranges, parameters the theorem does not take. Exit 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter given as a scalar "v", a list "v1,v2" or a range
/// "start:stop:step" (stop included when within half a step).
struct ParamGrid {
    std::vector<double> values;
    bool ranged = false;  // list or range syntax
};

ParamGrid parse_param(std::string_view name, std::string_view text);

/// A theorem as named on the command line. T2_1 and T3_1 run both one-sided
/// bounds and report the tighter.
struct TheoremChoice {
    TheoremId id = TheoremId::HH;
    bool both_sides = false;

    std::string name() const;
};

std::optional<TheoremChoice> theorem_choice(std::string_view name);
ParameterUse parameters_of(const TheoremChoice& c);

CheckReport run_choice(const TheoremChoice& c, const FunctionSpec& f, const CheckInputs& in, const CheckSettings& s);

struct RunConfig {
    Command command = Command::Check;
    std::optional<TheoremChoice> theorem;
    std::string function_text;
    std::optional<ParamGrid> a, b, m, alpha, alpha1, q;
    long trials = 1000;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Text;
    CheckSettings settings;
    unsigned threads = 1;
};

/// Rejects parameters the theorem does not consume and reports missing ones.
void validate_parameters(const RunConfig& cfg);

} // namespace fracineq::cli
