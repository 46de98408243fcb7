#include "fracineq/cli/run_config.hpp"

#include "fracineq/error.hpp"

#include <charconv>
#include <cmath>

namespace fracineq::cli {
namespace {

constexpr long kMaxGridPoints = 1000000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view name, std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("--" + std::string(name) + ": '" + std::string(text) + "' is not a number");
    if (!std::isfinite(v)) throw UsageError("--" + std::string(name) + ": value must be finite");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

} // namespace

std::optional<OutputFormat> format_from_string(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json-lines") return OutputFormat::JsonLines;
    if (s == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

ParamGrid parse_param(std::string_view name, std::string_view text) {
    ParamGrid g;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw UsageError("--" + std::string(name) + ": range must be start:stop:step");
        const double start = parse_real(name, parts[0]);
        const double stop = parse_real(name, parts[1]);
        const double step = parse_real(name, parts[2]);
        if (step == 0.0 || (stop - start) * step < 0.0)
            throw UsageError("--" + std::string(name) + ": step must be nonzero and point from start to stop");
        const double span = (stop - start) / step;
        if (!(span < static_cast<double>(kMaxGridPoints)))
            throw UsageError("--" + std::string(name) + ": range has too many points");
        const long count = static_cast<long>(std::floor(span + 0.5)) + 1;
        for (long i = 0; i < count; ++i) g.values.push_back(start + static_cast<double>(i) * step);
        // the last point lands on stop when it is within half a step of it
        if (std::abs(g.values.back() - stop) <= 0.5 * std::abs(step)) g.values.back() = stop;
        g.ranged = true;
        return g;
    }
    const auto parts = split(text, ',');
    for (std::string_view p : parts) g.values.push_back(parse_real(name, p));
    g.ranged = parts.size() > 1;
    return g;
}

std::string TheoremChoice::name() const {
    if (!both_sides) return to_string(id);
    return id == TheoremId::T2_1a ? "T2_1" : "T3_1";
}

std::optional<TheoremChoice> theorem_choice(std::string_view name) {
    if (name == "T2_1") return TheoremChoice{TheoremId::T2_1a, true};
    if (name == "T3_1") return TheoremChoice{TheoremId::T3_1a, true};
    const auto id = theorem_from_string(name);
    if (!id) return std::nullopt;
    return TheoremChoice{*id, false};
}

ParameterUse parameters_of(const TheoremChoice& c) { return fracineq::parameters_of(c.id); }

CheckReport run_choice(const TheoremChoice& c, const FunctionSpec& f, const CheckInputs& in, const CheckSettings& s) {
    if (!c.both_sides) return run_theorem(c.id, f, in, s);
    const auto need = [](const std::optional<double>& v, const char* name) {
        if (!v) throw PreconditionError(name, std::string("parameter '") + name + "' is required");
        return *v;
    };
    if (c.id == TheoremId::T2_1a) return check_thm_2_1(f, in.a, in.b, need(in.m, "m"), need(in.alpha, "alpha"), s);
    return check_thm_3_1(f, in.a, in.b, need(in.m, "m"), need(in.alpha, "alpha"), need(in.alpha1, "alpha1"), s);
}

void validate_parameters(const RunConfig& cfg) {
    if (cfg.command == Command::Fuzz || cfg.command == Command::Identities) {
        const char* cmd = cfg.command == Command::Fuzz ? "fuzz" : "identities";
        if (cfg.theorem) throw UsageError(std::string(cmd) + " does not take --theorem");
        if (!cfg.function_text.empty()) throw UsageError(std::string(cmd) + " does not take --f");
        if (cfg.a || cfg.b || cfg.m || cfg.alpha || cfg.alpha1 || cfg.q)
            throw UsageError(std::string(cmd) + " does not take theorem parameters");
        return;
    }
    if (!cfg.theorem) throw UsageError("--theorem is required");
    if (cfg.theorem->id == TheoremId::FACTS) throw UsageError("FACTS is run with the 'identities' command");
    if (cfg.function_text.empty()) throw UsageError("--f is required");
    if (!cfg.a) throw UsageError("--a is required");
    if (!cfg.b) throw UsageError("--b is required");

    const ParameterUse use = parameters_of(*cfg.theorem);
    const std::string th = cfg.theorem->name();
    const auto check = [&](const std::optional<ParamGrid>& g, bool used, const char* name) {
        if (g && !used) throw UsageError("--" + std::string(name) + " is not a parameter of " + th);
        if (!g && used) throw UsageError("--" + std::string(name) + " is required by " + th);
    };
    check(cfg.m, use.m, "m");
    check(cfg.alpha, use.alpha, "alpha");
    check(cfg.alpha1, use.alpha1, "alpha1");
    check(cfg.q, use.q, "q");

    const std::optional<ParamGrid>* all[] = {&cfg.a, &cfg.b, &cfg.m, &cfg.alpha, &cfg.alpha1, &cfg.q};
    bool any_ranged = false;
    for (const auto* g : all) {
        if (!*g) continue;
        any_ranged = any_ranged || (*g)->ranged;
        if (cfg.command == Command::Check && (*g)->values.size() != 1)
            throw UsageError("check takes scalar parameters; use sweep for ranges");
    }
    if (cfg.command == Command::Sweep && !any_ranged)
        throw UsageError("sweep needs at least one parameter given as a range or list");
}

} // namespace fracineq::cli
