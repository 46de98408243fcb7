#include "fracineq/cli/commands.hpp"

#include "fracineq/cli/render.hpp"
#include "fracineq/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>
#include <tuple>

namespace fracineq::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t status_column(Status s) {
    switch (s) {
    case Status::Verified: return 0;
    case Status::Violated: return 1;
    case Status::HypothesesUnmet: return 2;
    case Status::Inconclusive: return 3;
    }
    return 3;
}

constexpr std::size_t kNotApplicable = 4;
constexpr const char* kColumnNames[kStatusColumns] = {"verified", "violated", "hypotheses_unmet", "inconclusive",
                                                      "not_applicable"};

std::optional<FunctionSpec> parse_function(const RunConfig& cfg, std::ostream& err) {
    try {
        return parse(cfg.function_text);
    } catch (const ParseError& e) {
        err << "error: --f: " << e.what() << '\n';
        err << "  " << cfg.function_text << '\n';
        err << "  " << std::string(e.offset(), ' ') << "^\n";
        return std::nullopt;
    }
}

double scalar(const std::optional<ParamGrid>& g) { return g->values.front(); }

std::optional<double> maybe(const std::optional<ParamGrid>& g) {
    if (!g) return std::nullopt;
    return g->values.front();
}

// A row whose checker refused its inputs; the sweep keeps going.
CheckReport refused_row(const TheoremChoice& c, const std::string& text, const CheckInputs& in, const std::string& why) {
    CheckReport r;
    r.theorem_id = c.id;
    r.lhs = r.rhs = r.margin = kNaN;
    r.status = Status::Inconclusive;
    r.inputs = in;
    r.inputs.function_text = text;
    r.notes.push_back(why);
    return r;
}

void emit(std::ostream& out, const CheckReport& r, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: render_text(out, r); break;
    case OutputFormat::JsonLines: out << report_json(r).dump() << '\n'; break;
    case OutputFormat::Csv: out << csv_row(r) << '\n'; break;
    }
}

} // namespace

int exit_code_for(Status s) {
    switch (s) {
    case Status::Verified: return kExitOk;
    case Status::Violated: return kExitViolated;
    case Status::HypothesesUnmet: return kExitUnmet;
    case Status::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(n, 256))));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

// ---- check ------------------------------------------------------------------

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto f = parse_function(cfg, err);
    if (!f) return kExitUsage;
    CheckInputs in;
    in.a = scalar(cfg.a);
    in.b = scalar(cfg.b);
    in.m = maybe(cfg.m);
    in.alpha = maybe(cfg.alpha);
    in.alpha1 = maybe(cfg.alpha1);
    in.q = maybe(cfg.q);
    CheckReport r;
    try {
        r = run_choice(*cfg.theorem, *f, in, cfg.settings);
    } catch (const PreconditionError& e) {
        err << "error: precondition on '" << e.field() << "': " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        r = refused_row(*cfg.theorem, f->to_string(), in, std::string("error: ") + e.what());
    }
    if (cfg.format == OutputFormat::Csv) out << csv_header() << '\n';
    emit(out, r, cfg.format);
    return exit_code_for(r.status);
}

// ---- sweep ------------------------------------------------------------------

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto f = parse_function(cfg, err);
    if (!f) return kExitUsage;

    // lexicographic over (a, b, m, alpha, alpha1, q); the last varies fastest
    const std::optional<ParamGrid>* axes[] = {&cfg.a, &cfg.b, &cfg.m, &cfg.alpha, &cfg.alpha1, &cfg.q};
    std::vector<std::size_t> extent;
    std::size_t total = 1;
    for (const auto* g : axes) {
        extent.push_back(*g ? (*g)->values.size() : 1);
        total *= extent.back();
    }
    const auto point = [&](std::size_t index) {
        std::array<std::optional<double>, 6> v;
        for (std::size_t k = 6; k-- > 0;) {
            const std::size_t i = index % extent[k];
            index /= extent[k];
            if (*axes[k]) v[k] = (*axes[k])->values[i];
        }
        CheckInputs in;
        in.a = *v[0];
        in.b = *v[1];
        in.m = v[2];
        in.alpha = v[3];
        in.alpha1 = v[4];
        in.q = v[5];
        return in;
    };

    std::vector<CheckReport> rows(total);
    parallel_for(total, cfg.threads, [&](std::size_t i) {
        const CheckInputs in = point(i);
        try {
            rows[i] = run_choice(*cfg.theorem, *f, in, cfg.settings);
        } catch (const PreconditionError& e) {
            rows[i] = refused_row(*cfg.theorem, f->to_string(), in,
                                  "precondition on '" + e.field() + "': " + e.what());
        } catch (const Error& e) {
            rows[i] = refused_row(*cfg.theorem, f->to_string(), in, std::string("error: ") + e.what());
        }
    });

    if (cfg.format == OutputFormat::Csv) out << csv_header() << '\n';
    bool violated = false;
    bool inconclusive = false;
    for (const CheckReport& r : rows) {
        if (cfg.format == OutputFormat::Text)
            out << text_row(r) << '\n';
        else
            emit(out, r, cfg.format);
        violated = violated || r.status == Status::Violated;
        inconclusive = inconclusive || r.status == Status::Inconclusive;
    }
    if (violated) return kExitViolated;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
}

// ---- fuzz -------------------------------------------------------------------

bool fuzz_sound(TheoremId id) {
    switch (id) {
    case TheoremId::HH:
    case TheoremId::T1_1:
    case TheoremId::T1_2:
    case TheoremId::L1_1:
    case TheoremId::T2_1a:
    case TheoremId::T2_1b:
    case TheoremId::T2_2:
    case TheoremId::C2_1:
    case TheoremId::T2_3: return true;
    default: return false;
    }
}

CheckInputs FuzzInstance::inputs_for(TheoremId id) const {
    const ParameterUse use = parameters_of(id);
    CheckInputs in;
    in.function_text = function_text;
    in.a = a;
    in.b = b;
    if (use.m) in.m = m;
    if (use.alpha) in.alpha = alpha;
    if (use.alpha1) in.alpha1 = alpha1;
    if (use.q) in.q = q;
    return in;
}

FuzzInstance draw_instance(const CounterRng& rng, std::uint64_t trial) {
    TrialStream s(rng, trial);
    FuzzInstance inst;
    double c[3];
    for (double& ci : c) ci = s.uniform(0.0, 5.0);
    for (double& ci : c)
        if (s.chance(0.25)) ci = 0.0;
    const double p1 = s.uniform(1.0, 4.0);
    const double p2 = s.uniform(1.0, 4.0);
    const double lambda = s.uniform(0.1, 2.0);

    std::string text;
    const auto term = [&text](double coeff, const std::string& body) {
        if (coeff == 0.0) return;
        if (!text.empty()) text += " + ";
        text += format_real(coeff) + "*" + body;
    };
    term(c[0], "x^" + format_real(p1));
    term(c[1], "x^" + format_real(p2));
    term(c[2], "(exp(" + format_real(lambda) + "*x) - 1)");
    inst.function_text = text.empty() ? "0" : text;

    double lo = s.uniform(0.0, 3.0);
    double hi = s.uniform(0.0, 3.0);
    if (lo > hi) std::swap(lo, hi);
    if (hi - lo < 0.01) {
        hi = std::min(3.0, lo + 0.01);
        lo = hi - 0.01;
    }
    inst.a = lo;
    inst.b = hi;

    inst.m = s.uniform_open_low(0.0, 1.0);
    if (s.chance(0.25)) inst.m = 1.0;
    inst.alpha = s.uniform_open_low(0.0, 2.0);
    inst.alpha1 = s.uniform_open_low(0.0, 1.0);
    if (s.chance(0.25)) inst.alpha1 = 1.0;
    inst.q = s.uniform(1.0, 4.0);
    if (s.chance(0.25)) inst.q = 1.0;
    return inst;
}

bool FuzzSummary::sound() const {
    for (const CheckReport& r : violations) {
        if (fuzz_sound(r.theorem_id)) return false;
        const bool tagged = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
            return n.rfind(kDiscrepancyTag, 0) == 0;
        });
        const bool replayable = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
            return n.rfind("replay: ", 0) == 0;
        });
        if (!tagged || !replayable) return false;
    }
    return true;
}

CheckSettings fuzz_defaults(const CheckSettings& s, bool grid_overridden) {
    CheckSettings out = s;
    if (!grid_overridden) out.cert.grid_n = 32;
    out.cert.stop_at_first_violation = true;
    return out;
}

namespace {

struct TrialEntry {
    bool applicable = false;
    Status status = Status::Inconclusive;
    double margin = kNaN;
    bool identity = false;
};

struct TrialOutcome {
    std::array<TrialEntry, kFuzzTheorems.size()> entries;
    std::vector<CheckReport> violations;
};

std::optional<CheckReport> run_fuzz_check(TheoremId id, const FunctionSpec& f, const FuzzInstance& inst,
                                          const CheckSettings& s) {
    const CheckInputs in = inst.inputs_for(id);
    try {
        return run_theorem(id, f, in, s);
    } catch (const PreconditionError&) {
        return std::nullopt;
    } catch (const Error& e) {
        TheoremChoice c{id, false};
        return refused_row(c, f.to_string(), in, std::string("error: ") + e.what());
    }
}

TrialOutcome run_trial(const CounterRng& rng, std::uint64_t trial, const CheckSettings& s) {
    const FuzzInstance inst = draw_instance(rng, trial);
    const FunctionSpec f = parse(inst.function_text);
    TrialOutcome out;
    for (std::size_t k = 0; k < kFuzzTheorems.size(); ++k) {
        const auto r = run_fuzz_check(kFuzzTheorems[k], f, inst, s);
        if (!r) continue;
        out.entries[k] = {true, r->status, r->margin, r->identity};
        if (r->status == Status::Violated) out.violations.push_back(*r);
    }
    return out;
}

} // namespace

FuzzSummary fuzz(std::uint64_t seed, long trials, const CheckSettings& s, unsigned threads) {
    const CounterRng rng(seed);
    FuzzSummary summary;
    summary.seed = seed;
    summary.trials = trials;
    summary.grid_n = s.cert.grid_n;

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    parallel_for(outcomes.size(), threads, [&](std::size_t i) { outcomes[i] = run_trial(rng, i, s); });

    // (margin, trial, theorem index) of every decided inequality
    std::vector<std::tuple<double, std::size_t, std::size_t>> decided;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (std::size_t k = 0; k < kFuzzTheorems.size(); ++k) {
            const TrialEntry& e = outcomes[i].entries[k];
            if (!e.applicable) {
                ++summary.counts[k][kNotApplicable];
                continue;
            }
            ++summary.counts[k][status_column(e.status)];
            if (!e.identity && std::isfinite(e.margin) &&
                (e.status == Status::Verified || e.status == Status::Violated))
                decided.emplace_back(e.margin, i, k);
        }
        for (CheckReport& r : outcomes[i].violations) {
            summary.violations.push_back(std::move(r));
            summary.violation_trials.push_back(static_cast<long>(i));
        }
    }

    const std::size_t k = std::min(kMinimumMarginCount, decided.size());
    std::partial_sort(decided.begin(), decided.begin() + static_cast<std::ptrdiff_t>(k), decided.end());
    for (std::size_t j = 0; j < k; ++j) {
        const auto [margin, trial, idx] = decided[j];
        const FuzzInstance inst = draw_instance(rng, trial);
        const FunctionSpec f = parse(inst.function_text);
        CheckReport r = *run_fuzz_check(kFuzzTheorems[idx], f, inst, s);
        if (std::none_of(r.notes.begin(), r.notes.end(), [](const std::string& n) { return n.rfind("replay: ", 0) == 0; }))
            r.notes.push_back("replay: " + replay_command(r, s));
        r.notes.push_back("trial " + std::to_string(trial));
        summary.minimum_margin.push_back(std::move(r));
    }
    return summary;
}

void render_fuzz(std::ostream& out, const FuzzSummary& sm, const CheckSettings& s, OutputFormat format) {
    const auto replay_of = [&s](const CheckReport& r) {
        for (const std::string& n : r.notes)
            if (n.rfind("replay: ", 0) == 0) return n.substr(8);
        return replay_command(r, s);
    };

    if (format == OutputFormat::JsonLines) {
        nlohmann::json head = {{"record", "run"}, {"seed", sm.seed}, {"trials", sm.trials}, {"grid_n", sm.grid_n},
                               {"sound", sm.sound()}};
        out << head.dump() << '\n';
        for (std::size_t k = 0; k < kFuzzTheorems.size(); ++k) {
            nlohmann::json row = {{"record", "counts"}, {"theorem_id", to_string(kFuzzTheorems[k])}};
            for (std::size_t c = 0; c < kStatusColumns; ++c) row[kColumnNames[c]] = sm.counts[k][c];
            out << row.dump() << '\n';
        }
        for (const CheckReport& r : sm.minimum_margin) {
            nlohmann::json j = report_json(r);
            j["record"] = "minimum_margin";
            j["replay"] = replay_of(r);
            out << j.dump() << '\n';
        }
        for (std::size_t i = 0; i < sm.violations.size(); ++i) {
            nlohmann::json j = report_json(sm.violations[i]);
            j["record"] = "violation";
            j["trial"] = sm.violation_trials[i];
            j["replay"] = replay_of(sm.violations[i]);
            out << j.dump() << '\n';
        }
        return;
    }

    if (format == OutputFormat::Csv) {
        out << "record,theorem";
        for (const char* name : kColumnNames) out << ',' << name;
        out << '\n';
        for (std::size_t k = 0; k < kFuzzTheorems.size(); ++k) {
            out << "counts," << to_string(kFuzzTheorems[k]);
            for (long c : sm.counts[k]) out << ',' << c;
            out << '\n';
        }
        out << "record," << csv_header() << ",replay\n";
        for (const CheckReport& r : sm.minimum_margin)
            out << "minimum_margin," << csv_row(r) << ',' << csv_field(replay_of(r)) << '\n';
        for (const CheckReport& r : sm.violations)
            out << "violation," << csv_row(r) << ',' << csv_field(replay_of(r)) << '\n';
        return;
    }

    out << "fuzz seed=" << sm.seed << " trials=" << sm.trials << " grid_n=" << sm.grid_n << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %10s %10s %18s %14s %16s\n", "theorem", kColumnNames[0], kColumnNames[1],
                  kColumnNames[2], kColumnNames[3], kColumnNames[4]);
    out << line;
    for (std::size_t k = 0; k < kFuzzTheorems.size(); ++k) {
        const auto& c = sm.counts[k];
        std::snprintf(line, sizeof line, "%-8s %10ld %10ld %18ld %14ld %16ld\n", to_string(kFuzzTheorems[k]).c_str(),
                      c[0], c[1], c[2], c[3], c[4]);
        out << line;
    }
    out << "\nminimum margins (" << sm.minimum_margin.size() << "):\n";
    for (const CheckReport& r : sm.minimum_margin) {
        out << "  " << text_row(r) << '\n';
        out << "    replay: " << replay_of(r) << '\n';
    }
    out << "\nviolations (" << sm.violations.size() << "):\n";
    for (std::size_t i = 0; i < sm.violations.size(); ++i) {
        const CheckReport& r = sm.violations[i];
        out << "  trial " << sm.violation_trials[i] << ": " << text_row(r) << '\n';
        for (const std::string& n : r.notes) out << "    note: " << n << '\n';
    }
    out << "\nresult: " << (sm.sound() ? "sound" : "UNSOUND") << '\n';
}

int run_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.trials < 1) {
        err << "error: --trials must be >= 1\n";
        return kExitUsage;
    }
    const FuzzSummary sm = fuzz(cfg.seed, cfg.trials, cfg.settings, cfg.threads);
    render_fuzz(out, sm, cfg.settings, cfg.format);
    return sm.sound() ? kExitOk : kExitViolated;
}

// ---- identities ---------------------------------------------------------------

int run_identities(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::vector<double> alphas = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    const std::vector<double> alpha1s = {0.25, 0.5, 0.75, 1.0};
    const std::vector<CheckReport> facts = run_proof_fact_suite(alphas, alpha1s);

    if (cfg.format == OutputFormat::Csv) out << "fact,lhs,rhs,margin,status,informational\n";
    int code = kExitOk;
    std::string failing;
    for (const CheckReport& r : facts) {
        const std::string& label = r.notes.front();
        switch (cfg.format) {
        case OutputFormat::Text: {
            out << label << ": lhs = " << format_real(r.lhs) << ", rhs = " << format_real(r.rhs)
                << (r.identity ? ", resid = " : ", excess = ") << format_real(r.identity ? r.margin : r.lhs) << "  "
                << to_string(r.status) << (r.informational ? " (informational)" : "") << '\n';
            break;
        }
        case OutputFormat::JsonLines: {
            nlohmann::json j = report_json(r);
            j["fact"] = label;
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << csv_field(label) << ',' << csv_real(r.lhs) << ',' << csv_real(r.rhs) << ',' << csv_real(r.margin)
                << ',' << to_string(r.status) << ',' << (r.informational ? "true" : "false") << '\n';
            break;
        }
        if (r.informational || r.status == Status::Verified) continue;
        if (failing.empty()) failing = label;
        if (r.status == Status::Violated) code = kExitViolated;
        else if (code == kExitOk) code = kExitInconclusive;
    }
    if (code != kExitOk) err << "failing fact: " << failing << '\n';
    return code;
}

} // namespace fracineq::cli
