#include "fracineq/cli/app.hpp"

#include "fracineq/cli/commands.hpp"
#include "fracineq/error.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace fracineq::cli {
namespace {

struct RawOptions {
    std::string theorem;
    std::string f;
    std::string a, b, m, alpha, alpha1, q;
    long trials = 1000;
    std::uint64_t seed = 0;
    std::string format;
    double abs_tol = QuadSettings{}.abs_tol;
    int max_subdivisions = QuadSettings{}.max_subdivisions;
    int panel_order = QuadSettings{}.panel_order;
    int grid_n = CertSettings{}.grid_n;
    double cert_tol = CertSettings{}.tol;
    double check_tol = CheckSettings{}.check_tol;
    int monotone_grid_n = CheckSettings{}.monotone_grid_n;
    unsigned threads = 1;
};

} // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of fractional Hermite-Hadamard inequalities", "fracineq"};
    app.require_subcommand(1);
    app.footer(R"(Function grammar (--f):
  expr    := term (('+' | '-') term)*
  term    := unary (('*' | '/') unary)*
  unary   := '-' unary | power
  power   := primary ('^' unary)?          right-associative, binds tighter than unary minus
  primary := number | 'x' | 'e' | 'pi' | ('exp' | 'ln' | 'abs') '(' expr ')' | '(' expr ')'
  Exponents must be constant expressions. No implicit multiplication.

Exit status: 0 verified, 1 usage or domain error, 2 violated, 3 hypotheses unmet, 4 inconclusive.)");
    app.set_config("--config", "", "flat key = value file; keys are the long option names");

    RawOptions o;
    app.add_option("--theorem", o.theorem, "HH, T1_1, T1_2, L1_1, T2_1, T2_1a, T2_1b, T2_2, C2_1, T2_3, T3_1, "
                                           "T3_1a, T3_1b, C3_1, T3_2, C3_2");
    app.add_option("--f", o.f, "function of x, e.g. \"x^2 + exp(x)\"");
    app.add_option("--a", o.a, "left end point (scalar, v1,v2,... or start:stop:step)");
    app.add_option("--b", o.b, "right end point");
    app.add_option("--m", o.m, "m in (0, 1]");
    app.add_option("--alpha", o.alpha, "fractional order");
    app.add_option("--alpha1", o.alpha1, "convexity exponent in (0, 1]");
    app.add_option("--q", o.q, "power q >= 1");
    auto* trials = app.add_option("--trials", o.trials, "fuzz trials");
    auto* seed = app.add_option("--seed", o.seed, "fuzz seed");
    app.add_option("--format", o.format, "text | json-lines | csv");
    app.add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    app.add_option("--max-subdivisions", o.max_subdivisions, "quadrature bisection budget");
    app.add_option("--panel-order", o.panel_order, "Gauss-Legendre points per panel");
    auto* grid = app.add_option("--grid-n", o.grid_n, "certification grid points per axis");
    app.add_option("--cert-tol", o.cert_tol, "certification tolerance");
    app.add_option("--check-tol", o.check_tol, "verdict tolerance");
    app.add_option("--monotone-grid-n", o.monotone_grid_n, "grid for the decreasing |f'| certificate");
    app.add_option("--threads", o.threads, "worker threads for sweep and fuzz")->check(CLI::Range(1u, 256u));

    auto* check = app.add_subcommand("check", "run one checker at one parameter point")->fallthrough();
    auto* sweep = app.add_subcommand("sweep", "run one checker over a parameter grid")->fallthrough();
    auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized search over certified inputs")->fallthrough();
    auto* identities = app.add_subcommand("identities", "closed-form integral facts")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        app.exit(e, help, err);
        out << help.str();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    RunConfig cfg;
    try {
        if (check->parsed()) cfg.command = Command::Check;
        else if (sweep->parsed()) cfg.command = Command::Sweep;
        else if (fuzz_cmd->parsed()) cfg.command = Command::Fuzz;
        else if (identities->parsed()) cfg.command = Command::Identities;

        if (!o.theorem.empty()) {
            cfg.theorem = theorem_choice(o.theorem);
            if (!cfg.theorem) throw UsageError("--theorem: unknown theorem '" + o.theorem + "'");
        }
        cfg.function_text = o.f;
        const auto grid_of = [&app](const char* name, const std::string& text) -> std::optional<ParamGrid> {
            if (app.get_option(std::string("--") + name)->count() == 0) return std::nullopt;
            return parse_param(name, text);
        };
        cfg.a = grid_of("a", o.a);
        cfg.b = grid_of("b", o.b);
        cfg.m = grid_of("m", o.m);
        cfg.alpha = grid_of("alpha", o.alpha);
        cfg.alpha1 = grid_of("alpha1", o.alpha1);
        cfg.q = grid_of("q", o.q);
        if (cfg.command != Command::Fuzz && (trials->count() || seed->count()))
            throw UsageError("--trials and --seed apply to fuzz only");
        cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.threads = o.threads;

        if (o.format.empty()) {
            cfg.format = cfg.command == Command::Sweep ? OutputFormat::Csv : OutputFormat::Text;
        } else {
            const auto fmt = format_from_string(o.format);
            if (!fmt) throw UsageError("--format: expected text, json-lines or csv");
            cfg.format = *fmt;
        }

        cfg.settings.quad = {o.abs_tol, o.max_subdivisions, o.panel_order};
        cfg.settings.quad.validate();
        cfg.settings.cert.grid_n = o.grid_n;
        cfg.settings.cert.tol = o.cert_tol;
        if (o.grid_n < 2) throw UsageError("--grid-n must be at least 2");
        if (!(o.cert_tol >= 0.0)) throw UsageError("--cert-tol must be >= 0");
        if (!(o.check_tol >= 0.0)) throw UsageError("--check-tol must be >= 0");
        if (o.monotone_grid_n < 2) throw UsageError("--monotone-grid-n must be at least 2");
        cfg.settings.check_tol = o.check_tol;
        cfg.settings.monotone_grid_n = o.monotone_grid_n;
        if (cfg.command == Command::Fuzz) cfg.settings = fuzz_defaults(cfg.settings, grid->count() > 0);

        validate_parameters(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.field() << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        switch (cfg.command) {
        case Command::Check: return run_check(cfg, out, err);
        case Command::Sweep: return run_sweep(cfg, out, err);
        case Command::Fuzz: return run_fuzz(cfg, out, err);
        case Command::Identities: return run_identities(cfg, out, err);
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.field() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInconclusive;
    }
    return kExitUsage;
}

} // namespace fracineq::cli
