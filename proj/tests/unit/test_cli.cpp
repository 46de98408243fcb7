#include "fracineq/cli/app.hpp"
#include "fracineq/cli/commands.hpp"
#include "fracineq/cli/rng.hpp"
#include "fracineq/cli/run_config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli = fracineq::cli;
namespace fi = fracineq;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "fracineq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_app(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) v.push_back(l);
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

} // namespace

TEST_CASE("check examples and exit codes") {
    const Outcome t21 = run({"check", "--theorem", "T2_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--alpha",
                             "0.5", "--format", "json-lines"});
    CHECK(t21.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(t21.out);
    CHECK(j["status"] == "verified");
    CHECK(std::abs(j["margin"].get<double>() - 4.0 / 15.0) < 1e-9);

    const Outcome l11 = run({"check", "--theorem", "L1_1", "--f", "x^2", "--a", "0", "--b", "1", "--alpha", "0.5",
                             "--format", "json-lines"});
    CHECK(l11.code == cli::kExitOk);
    const auto k = nlohmann::json::parse(l11.out);
    CHECK(k["margin"].get<double>() <= 1e-9);
    CHECK(std::abs(k["lhs"].get<double>() - 2.0 / 15.0) < 1e-9);
    CHECK(std::abs(k["rhs"].get<double>() - 2.0 / 15.0) < 1e-9);

    const Outcome t32 = run({"check", "--theorem", "T3_2", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1",
                             "--alpha", "1", "--alpha1", "1", "--q", "1"});
    CHECK(t32.code == cli::kExitUnmet);
    CHECK(t32.out.find("hypotheses_unmet") != std::string::npos);

    const Outcome bad = run({"check", "--theorem", "HH", "--f", "-x^2", "--a", "0", "--b", "1", "--cert-tol", "1e6"});
    CHECK(bad.code == cli::kExitViolated);
    CHECK(bad.out.find("replay: fracineq check --theorem HH") != std::string::npos);

    const Outcome inc = run({"check", "--theorem", "T1_1", "--f", "ln(x)", "--a", "0.5", "--b", "1", "--m", "1"});
    CHECK(inc.code == cli::kExitInconclusive);
}

TEST_CASE("usage errors exit 1") {
    const std::vector<std::vector<std::string>> cases = {
        {},
        {"check"},
        {"check", "--theorem", "T9", "--f", "x", "--a", "0", "--b", "1"},
        {"check", "--theorem", "HH", "--a", "0", "--b", "1"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1"},
        {"check", "--theorem", "T2_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1"},
        {"check", "--theorem", "T2_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--alpha", "0.5", "--q", "2"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "0:1:0.5"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "abc"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1", "--format", "xml"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1", "--seed", "3"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "1", "--b", "0"},
        {"check", "--theorem", "T1_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "0"},
        {"check", "--theorem", "C2_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--alpha", "0.5", "--q", "1"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1", "--abs-tol", "0"},
        {"check", "--theorem", "FACTS", "--f", "x", "--a", "0", "--b", "1"},
        {"sweep", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1"},
        {"sweep", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1:0:0.5"},
        {"fuzz", "--theorem", "HH"},
        {"fuzz", "--alpha", "1"},
        {"identities", "--f", "x"},
        {"check", "--theorem", "HH", "--f", "x^2", "--a", "0", "--b", "1", "--bogus"},
    };
    for (const auto& c : cases) {
        std::string joined;
        for (const auto& s : c) joined += s + " ";
        INFO("args: " << joined);
        const Outcome o = run(c);
        CHECK(o.code == cli::kExitUsage);
        CHECK_FALSE(o.err.empty());
    }
}

TEST_CASE("parse errors point at the offending byte") {
    const Outcome o = run({"check", "--theorem", "HH", "--f", "x + * 2", "--a", "0", "--b", "1"});
    CHECK(o.code == cli::kExitUsage);
    CHECK(o.err.find("offset 4") != std::string::npos);
    CHECK(o.err.find("  x + * 2\n      ^") != std::string::npos);
}

TEST_CASE("help documents the grammar") {
    const Outcome o = run({"--help"});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out.find("exp") != std::string::npos);
    CHECK(o.out.find("check") != std::string::npos);
}

TEST_CASE("parameter grids") {
    const cli::ParamGrid r = cli::parse_param("alpha", "0.1:1.0:0.1");
    REQUIRE(r.values.size() == 10);
    CHECK(r.values.back() == 1.0);
    CHECK(r.ranged);
    const cli::ParamGrid down = cli::parse_param("a", "1:0:-0.25");
    CHECK(down.values == std::vector<double>{1.0, 0.75, 0.5, 0.25, 0.0});
    const cli::ParamGrid list = cli::parse_param("q", "1, 2,3");
    CHECK(list.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(list.ranged);
    const cli::ParamGrid one = cli::parse_param("q", "2");
    CHECK_FALSE(one.ranged);
    CHECK(cli::parse_param("b", "2:2:1").values == std::vector<double>{2.0});
    CHECK_THROWS_AS(cli::parse_param("b", "0:1:0"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_param("b", "0:1"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_param("b", "0:1e9:1e-9"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_param("b", "inf"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_param("b", "1,,2"), cli::UsageError);
}

TEST_CASE("sweep of Theorem 2.2: 20 verified rows in lexicographic order") {
    const Outcome o = run({"sweep", "--theorem", "T2_2", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--alpha",
                           "0.1:1.0:0.1", "--q", "1,2"});
    CHECK(o.code == cli::kExitOk);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0] == "theorem,f,a,b,m,alpha,alpha1,q,lhs,rhs,margin,status,notes");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        REQUIRE(cells.size() == 13);
        CHECK(cells[11] == "verified");
        CHECK(cells[7] == ((i - 1) % 2 == 0 ? "1" : "2"));
        const double alpha = std::stod(cells[5]);
        CHECK(std::abs(alpha - 0.1 * static_cast<double>((i + 1) / 2)) < 1e-12);
        CHECK(cells[6].empty());
    }
    CHECK(split_csv(rows.back())[5] == "1");
}

TEST_CASE("sweep of Lemma 1.1 residuals") {
    const Outcome o = run({"sweep", "--theorem", "L1_1", "--f", "x^2 + exp(x)", "--a", "0.5", "--b", "2", "--alpha",
                           "0.25:2:0.25"});
    CHECK(o.code == cli::kExitOk);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(split_csv(rows[i])[10]) <= 1e-8);
}

TEST_CASE("sweep of Theorem 3.2 records D off the diagonal") {
    const Outcome o = run({"sweep", "--theorem", "T3_2", "--f", "4*x - x^2", "--a", "0", "--b", "1", "--m", "1",
                           "--alpha", "0.5,1", "--alpha1", "0.5,1", "--q", "1"});
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split_csv(rows[i]);
        const std::string& notes = cells[12];
        const auto pos = notes.find("D(alpha, alpha1) = ");
        REQUIRE(pos != std::string::npos);
        const double d = std::stod(notes.substr(pos + 19));
        if (cells[5] == cells[6])
            CHECK(d < 1e-9);
        else
            CHECK(d > 1e-4);
    }
}

TEST_CASE("sweep keeps going past rejected points") {
    const Outcome o =
        run({"sweep", "--theorem", "T1_2", "--f", "x^2", "--a", "0", "--b", "1", "--m", "0,0.5", "--format", "csv"});
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 3);
    CHECK(split_csv(rows[1])[11] == "inconclusive");
    CHECK(split_csv(rows[2])[11] == "verified");
    CHECK(o.code == cli::kExitInconclusive);
}

TEST_CASE("json-lines output is one object per line with stable fields") {
    const Outcome o = run({"sweep", "--theorem", "T3_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--alpha",
                           "0.5,1", "--alpha1", "1", "--format", "json-lines"});
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 2);
    for (const auto& line : rows) {
        const auto j = nlohmann::json::parse(line);
        for (const char* key : {"theorem_id", "lhs", "rhs", "margin", "status", "hypotheses", "notes", "inputs"})
            CHECK(j.contains(key));
        CHECK(j["hypotheses"].is_array());
        CHECK(j["hypotheses"][0].contains("certificate"));
    }
}

TEST_CASE("csv prints 17 significant digits") {
    const Outcome o = run({"check", "--theorem", "T1_1", "--f", "x^2", "--a", "0", "--b", "1", "--m", "1", "--format",
                           "csv"});
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 2);
    const auto cells = split_csv(rows[1]);
    CHECK(cells[8].size() >= 18);
    CHECK(std::stod(cells[8]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sweep and fuzz are byte-identical across runs and thread counts") {
    const std::vector<std::string> sweep = {"sweep", "--theorem", "T2_3", "--f", "x^2 + x", "--a", "0:0.5:0.25",
                                            "--b", "1,2", "--m", "0.5,1", "--alpha", "0.5"};
    const Outcome s1 = run(sweep);
    auto threaded = sweep;
    threaded.insert(threaded.end(), {"--threads", "3"});
    const Outcome s2 = run(threaded);
    CHECK(s1.out == s2.out);
    CHECK(s1.out == run(sweep).out);

    for (const char* fmt : {"text", "json-lines", "csv"}) {
        const std::vector<std::string> fuzz = {"fuzz", "--trials", "12", "--seed", "7", "--format", fmt};
        const Outcome f1 = run(fuzz);
        auto tf = fuzz;
        tf.insert(tf.end(), {"--threads", "4"});
        const Outcome f2 = run(tf);
        CHECK(f1.code == cli::kExitOk);
        CHECK(f1.out == f2.out);
        CHECK(f1.out == run(fuzz).out);
        CHECK(f1.out != run({"fuzz", "--trials", "12", "--seed", "8", "--format", fmt}).out);
    }
}

TEST_CASE("fuzz json-lines records") {
    const Outcome o = run({"fuzz", "--trials", "10", "--seed", "42", "--format", "json-lines"});
    CHECK(o.code == cli::kExitOk);
    std::size_t minimum = 0, counts = 0, runs = 0;
    for (const auto& line : lines(o.out)) {
        const auto j = nlohmann::json::parse(line);
        const std::string type = j["record"];
        if (type == "run") ++runs;
        if (type == "counts") ++counts;
        if (type == "minimum_margin") {
            ++minimum;
            CHECK(j["replay"].get<std::string>().rfind("fracineq check --theorem ", 0) == 0);
        }
    }
    CHECK(runs == 1);
    CHECK(counts == cli::kFuzzTheorems.size());
    CHECK(minimum == cli::kMinimumMarginCount);
}

TEST_CASE("fuzz draws stay in range") {
    const cli::CounterRng rng(42);
    for (std::uint64_t t = 0; t < 500; ++t) {
        const cli::FuzzInstance x = cli::draw_instance(rng, t);
        CHECK(0.0 <= x.a);
        CHECK(x.a < x.b);
        CHECK(x.b <= 3.0);
        CHECK(x.b - x.a >= 0.01 - 1e-12);
        CHECK((0.0 < x.m && x.m <= 1.0));
        CHECK((0.0 < x.alpha && x.alpha <= 2.0));
        CHECK((0.0 < x.alpha1 && x.alpha1 <= 1.0));
        CHECK((1.0 <= x.q && x.q <= 4.0));
        CHECK_NOTHROW(fi::parse(x.function_text));
        CHECK(fi::parse(x.function_text)(0.0) == 0.0);
    }
    CHECK(cli::draw_instance(rng, 3).function_text == cli::draw_instance(cli::CounterRng(42), 3).function_text);
}

TEST_CASE("counter RNG is the documented SplitMix64 finalizer") {
    const auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    const cli::CounterRng rng(12345);
    for (std::uint64_t c : {0ULL, 1ULL, 63ULL, 1000000ULL}) {
        CHECK(rng.draw(c) == mix(12345ULL + 0x9e3779b97f4a7c15ULL * (c + 1)));
        CHECK(rng.uniform(c) == static_cast<double>(rng.draw(c) >> 11) * 0x1.0p-53);
    }
}

TEST_CASE("identities") {
    const Outcome o = run({"identities"});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out.find("informational") != std::string::npos);
    const Outcome j = run({"identities", "--format", "json-lines"});
    for (const auto& line : lines(j.out)) CHECK(nlohmann::json::parse(line).is_object());
}

TEST_CASE("config file") {
    const std::string path = "fracineq_test_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "theorem = T2_1\nf = x^2\na = 0\nb = 1\nm = 1\nalpha = 0.5\nformat = csv\n";
    }
    const Outcome o = run({"check", "--config", path});
    CHECK(o.code == cli::kExitOk);
    CHECK(split_csv(lines(o.out).at(1))[11] == "verified");
    // command-line flags override the file
    const Outcome over = run({"check", "--config", path, "--alpha", "1", "--format", "json-lines"});
    CHECK(nlohmann::json::parse(over.out)["inputs"]["alpha"] == 1.0);
    std::remove(path.c_str());
}
