#include "expr_gen.hpp"
#include "fracineq/error.hpp"
#include "fracineq/expr.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace fracineq;
namespace a = fracineq::ast;

namespace {

bool same(const FunctionSpec& f, const NodePtr& expected) { return a::structurally_equal(*f.ast(), *expected); }

std::size_t offset_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("no ParseError for '" << text << "'");
    return 0;
}

} // namespace

TEST_CASE("grammar shapes") {
    CHECK(same(parse("x^2"), a::pow(a::variable(), 2.0)));
    CHECK(same(parse("4*x - x^2"), a::sub(a::mul(a::constant(4), a::variable()), a::pow(a::variable(), 2.0))));
    CHECK(same(parse("exp(2*x)/(1+x)"),
               a::div(a::exp(a::mul(a::constant(2), a::variable())), a::add(a::constant(1), a::variable()))));
}

TEST_CASE("precedence and associativity") {
    // power binds tighter than unary minus
    CHECK(same(parse("-x^2"), a::neg(a::pow(a::variable(), 2.0))));
    CHECK(parse("-x^2")(3.0) == -9.0);
    CHECK(parse("2^3^2")(0.0) == 512.0);
    CHECK(parse("x - 2 - 1")(5.0) == 2.0);
    CHECK(parse("12 / 3 / 2")(0.0) == 2.0);
    CHECK(parse("1 + 2*3")(0.0) == 7.0);
    CHECK(parse("x^-1")(4.0) == 0.25);
    CHECK(parse("e")(0.0) == std::numbers::e);
    CHECK(parse("pi")(0.0) == std::numbers::pi);
    CHECK(parse("  x   *  2 ")(1.5) == 3.0);
    CHECK(parse("1.5e2*x")(1.0) == 150.0);
    CHECK_THROWS_AS(parse("2e"), ParseError);  // no implicit multiplication
}

TEST_CASE("evaluate") {
    CHECK(evaluate(parse("x^2"), 3.0) == 9.0);
    CHECK(evaluate(parse("exp(x)"), 0.0) == 1.0);
    CHECK(evaluate(parse("4*x - x^2"), 1.0) == 3.0);
    CHECK(evaluate(parse("abs(x - 2)"), 0.5) == 1.5);
    CHECK(evaluate(parse("ln(e^2)"), 0.0) == doctest::Approx(2.0));
}

TEST_CASE("evaluation errors carry x and the node") {
    try {
        evaluate(parse("1 + ln(x)"), 0.0);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.x() == 0.0);
        CHECK(e.node() == "ln(x)");
    }
    try {
        evaluate(parse("1/(x - 1)"), 1.0);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.x() == 1.0);
        CHECK(e.node() == "1/(x - 1)");
    }
    CHECK_THROWS_AS(evaluate(parse("exp(x)"), 1000.0), EvalError);
    CHECK_THROWS_AS(evaluate(parse("x^-2"), 0.0), EvalError);
    CHECK_THROWS_AS(evaluate(parse("x^0.5"), -1.0), EvalError);
}

TEST_CASE("differentiation rules") {
    CHECK(differentiate(parse("x^2")).to_string() == "2*x");
    CHECK(differentiate(parse("3.5")).to_string() == "0");
    CHECK(differentiate(parse("exp(2*x)")).to_string() == "2*exp(2*x)");
    CHECK(differentiate(parse("x")).to_string() == "1");
    CHECK(differentiate(parse("ln(x)"))(4.0) == 0.25);
    CHECK(differentiate(parse("x/(1+x)"))(1.0) == doctest::Approx(0.25));
    CHECK(differentiate(parse("-x^3"))(2.0) == -12.0);
    CHECK_THROWS_AS(differentiate(parse("abs(x)")), UnsupportedError);
    CHECK_THROWS_AS(differentiate(parse("x + abs(x - 1)")), UnsupportedError);
}

TEST_CASE("abs_power builds |g|^q") {
    const FunctionSpec g = parse("2 - 4*x");
    CHECK(abs_power(g, 2.0)(1.0) == 4.0);
    CHECK(abs_power(g, 1.0)(1.0) == 2.0);
    CHECK(abs_power(g, 1.0).to_string() == "abs(2 - 4*x)");
}

TEST_CASE("printer round-trips 50 generated expressions") {
    gen::ExprGenerator g(20240611);
    for (int i = 0; i < 50; ++i) {
        const std::string text = g.next();
        INFO("source: " << text);
        const FunctionSpec f = parse(text);
        const std::string printed = f.to_string();
        INFO("printed: " << printed);
        const FunctionSpec again = parse(printed);
        CHECK(a::structurally_equal(*f.ast(), *again.ast()));
        CHECK(again.to_string() == printed);
    }
}

TEST_CASE("derivatives agree with central differences on 50 generated expressions") {
    gen::ExprGenerator g(77);
    int tested = 0;
    while (tested < 50) {
        const std::string text = g.next();
        const FunctionSpec f = parse(text);
        const FunctionSpec df = differentiate(f);
        const double h = 1e-5;
        bool in_range = true;
        std::vector<double> xs;
        for (int k = 0; k < 100; ++k) xs.push_back(g.uniform(-2.0, 2.0));
        for (double x : xs) in_range = in_range && std::abs(f(x)) < 1e4 && std::abs(df(x)) < 1e4;
        if (!in_range) continue;  // keep central-difference rounding noise below the tolerance
        ++tested;
        for (double x : xs) {
            const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
            const double d = df(x);
            INFO("f = " << text << "  f' = " << df.to_string() << "  x = " << x);
            CHECK(std::abs(fd - d) <= 1e-6 * (1.0 + std::abs(d)));
        }
    }
}

TEST_CASE("malformed corpus reports byte offsets") {
    struct Case {
        const char* text;
        std::size_t offset;
    };
    const Case cases[] = {
        {"x +", 3},        {"2*(x+1", 6},    {"x $ 2", 2},   {"sin(x)", 0},  {"x^x", 2},
        {"exp x", 4},      {")x", 0},        {"x 2", 2},     {"(x))", 3},    {"x*/2", 2},
    };
    for (const Case& c : cases) {
        INFO("text: '" << c.text << "'");
        CHECK(offset_of(c.text) == c.offset);
    }
    CHECK(offset_of("") == 0);
}

TEST_CASE("parse errors list the expected tokens") {
    try {
        parse("x +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const auto& ex = e.expected();
        CHECK(std::find(ex.begin(), ex.end(), "x") != ex.end());
        CHECK(std::find(ex.begin(), ex.end(), "(") != ex.end());
    }
    try {
        parse("(x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const auto& ex = e.expected();
        CHECK(std::find(ex.begin(), ex.end(), ")") != ex.end());
    }
    try {
        parse("foo + x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier 'foo'") != std::string::npos);
    }
}

TEST_CASE("constants must be finite") {
    CHECK_THROWS_AS(parse("1e400"), ParseError);
    CHECK_THROWS_AS(a::constant(INFINITY), Error);
}

TEST_CASE("source text is kept") {
    const FunctionSpec f = parse("x^2 + 1");
    CHECK(f.source_text() == "x^2 + 1");
    CHECK(f.to_string() == "x^2 + 1");
}
