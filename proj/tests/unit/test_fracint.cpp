#include "expr_gen.hpp"
#include "fracineq/error.hpp"
#include "fracineq/expr.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace fi = fracineq;

namespace {

const fi::QuadSettings kQuad{};

double sqrt_pi() { return std::sqrt(std::numbers::pi); }

} // namespace

TEST_CASE("rl_left closed forms") {
    const fi::FunctionSpec sq = fi::parse("x^2");
    CHECK(fi::rl_left(sq, {1.0, 0.0, 1.0}, 1.0, kQuad) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(fi::rl_left(sq, {0.5, 0.0, 1.0}, 1.0, kQuad) - 16.0 / (15.0 * sqrt_pi())) < 1e-10);
    const fi::FunctionSpec c = fi::parse("3");
    for (double alpha : {0.1, 0.5, 1.0, 2.5}) {
        for (double x : {0.0, 0.3, 2.0}) {
            const double expected = 3.0 * std::pow(x + 1.0, alpha) / std::tgamma(alpha + 1.0);
            CHECK(std::abs(fi::rl_left(c, {alpha, -1.0, 2.0}, x, kQuad) - expected) < 1e-10);
        }
    }
}

TEST_CASE("rl_right closed forms") {
    const fi::FunctionSpec sq = fi::parse("x^2");
    CHECK(std::abs(fi::rl_right(sq, {0.5, 0.0, 1.0}, 0.0, kQuad) - 0.4 / sqrt_pi()) < 1e-10);
    CHECK(std::abs(fi::rl_right(sq, {0.5, 0.0, 1.0}, 0.0, kQuad) - 0.2256758) < 5e-8);
    CHECK(fi::rl_right(sq, {1.0, 0.0, 1.0}, 0.0, kQuad) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    const fi::FunctionSpec c = fi::parse("-2");
    for (double alpha : {0.2, 1.0, 3.0}) {
        const double expected = -2.0 * std::pow(1.5, alpha) / std::tgamma(alpha + 1.0);
        CHECK(std::abs(fi::rl_right(c, {alpha, 0.0, 2.0}, 0.5, kQuad) - expected) < 1e-10);
    }
}

TEST_CASE("degenerate intervals and preconditions") {
    const fi::FunctionSpec sq = fi::parse("x^2");
    CHECK(fi::rl_left(sq, {0.5, 1.0, 1.0}, 1.0, kQuad) == 0.0);
    CHECK(fi::rl_right(sq, {0.5, 1.0, 1.0}, 1.0, kQuad) == 0.0);
    CHECK(fi::rl_left(sq, {0.5, 0.0, 1.0}, 0.0, kQuad) == 0.0);
    CHECK_THROWS_AS(fi::rl_left(sq, {0.0, 0.0, 1.0}, 1.0, kQuad), fi::DomainError);
    CHECK_THROWS_AS(fi::rl_left(sq, {0.5, 1.0, 0.0}, 1.0, kQuad), fi::DomainError);
    CHECK_THROWS_AS(fi::rl_left(sq, {0.5, 0.0, 1.0}, 1.5, kQuad), fi::DomainError);
    CHECK_THROWS_AS(fi::rl_right(sq, {0.5, 0.0, 1.0}, -0.1, kQuad), fi::DomainError);
    CHECK_THROWS_AS(fi::rl_left(fi::parse("ln(x)"), {0.5, -1.0, 1.0}, 1.0, kQuad), fi::EvalError);
}

TEST_CASE("t_moment values") {
    const fi::FunctionSpec one = fi::parse("1");
    const fi::FunctionSpec sq = fi::parse("x^2");
    for (double alpha : {0.05, 0.5, 1.0, 4.0})
        for (auto o : {fi::Orientation::A, fi::Orientation::B, fi::Orientation::C, fi::Orientation::D})
            CHECK(fi::t_moment(one, 0.0, 1.0, 0.7, alpha, o, kQuad) == doctest::Approx(1.0 / alpha).epsilon(1e-11));
    // ∫ t^(-1/2) (1-t)^2 dt = B(1/2, 3)
    CHECK(std::abs(fi::t_moment(sq, 0.0, 1.0, 1.0, 0.5, fi::Orientation::A, kQuad) - 16.0 / 15.0) < 1e-10);
    CHECK(std::abs(fi::t_moment(sq, 0.0, 1.0, 1.0, 0.5, fi::Orientation::A, kQuad) - oracle::beta(0.5, 3.0)) < 1e-10);
}

TEST_CASE("segments of the four orientations") {
    const double a = 0.5, b = 2.0, m = 0.6;
    const fi::Segment A = fi::segment(fi::Orientation::A, a, b, m);
    const fi::Segment B = fi::segment(fi::Orientation::B, a, b, m);
    const fi::Segment C = fi::segment(fi::Orientation::C, a, b, m);
    const fi::Segment D = fi::segment(fi::Orientation::D, a, b, m);
    CHECK(A.at_one == a);
    CHECK(A.at_zero == m * b);
    CHECK(B.at_one == m * b);
    CHECK(B.at_zero == a);
    CHECK(C.at_one == b);
    CHECK(C.at_zero == m * a);
    CHECK(D.at_one == m * a);
    CHECK(D.at_zero == b);
}

TEST_CASE("cross-oracle: t_moment A against the left RL integral on 50 random instances") {
    gen::ExprGenerator g(5150);
    for (int i = 0; i < 50; ++i) {
        const std::string text = g.next(3);
        const fi::FunctionSpec f = fi::parse(text);
        const double a = g.uniform(0.0, 2.0);
        const double b = a + g.uniform(0.1, 2.0);
        const double alpha = g.uniform(0.1, 3.0);
        INFO("f = " << text << " a = " << a << " b = " << b << " alpha = " << alpha);
        const double via_rl = std::tgamma(alpha) * std::pow(b - a, -alpha) * fi::rl_left(f, {alpha, a, b}, b, kQuad);
        const double moment = fi::t_moment(f, a, b, 1.0, alpha, fi::Orientation::A, kQuad);
        CHECK(std::abs(via_rl - moment) < 1e-8);
        const double ref = oracle::t_moment(f, a, b, alpha);
        CHECK(std::abs(moment - ref) < 1e-8);
    }
}

TEST_CASE("corrected anchors of the four orientations") {
    for (const auto& entry : oracle::corpus()) {
        const fi::FunctionSpec f = fi::parse(entry.text);
        for (double alpha : {0.3, 1.0, 2.2}) {
            for (double m : {0.4, 0.8, 1.0}) {
                const double a = 0.2, b = 1.5;
                INFO(entry.text << " alpha = " << alpha << " m = " << m);
                const double sab = std::tgamma(alpha) * std::pow(m * b - a, -alpha);
                const double sba = std::tgamma(alpha) * std::pow(b - m * a, -alpha);
                const double A = sab * oracle::rl_left(entry.f, a, m * b, alpha);
                const double B = sab * oracle::rl_right(entry.f, a, m * b, alpha);
                const double C = sba * oracle::rl_right(entry.f, m * a, b, alpha);
                const double D = sba * oracle::rl_left(entry.f, m * a, b, alpha);
                CHECK(std::abs(fi::t_moment(f, a, b, m, alpha, fi::Orientation::A, kQuad) - A) < 1e-8);
                CHECK(std::abs(fi::t_moment(f, a, b, m, alpha, fi::Orientation::B, kQuad) - B) < 1e-8);
                CHECK(std::abs(fi::t_moment(f, a, b, m, alpha, fi::Orientation::C, kQuad) - C) < 1e-8);
                CHECK(std::abs(fi::t_moment(f, a, b, m, alpha, fi::Orientation::D, kQuad) - D) < 1e-8);
                CHECK(std::abs(fi::t_moment_via_rl(f, a, b, m, alpha, fi::Orientation::A, kQuad) - A) < 1e-8);
                CHECK(std::abs(fi::t_moment_via_rl(f, a, b, m, alpha, fi::Orientation::B, kQuad) - B) < 1e-8);
                CHECK(std::abs(fi::t_moment_via_rl(f, a, b, m, alpha, fi::Orientation::C, kQuad) - C) < 1e-8);
                CHECK(std::abs(fi::t_moment_via_rl(f, a, b, m, alpha, fi::Orientation::D, kQuad) - D) < 1e-8);
            }
        }
    }
    CHECK(fi::rl_anchor(fi::Orientation::A) == "J_{a+}^alpha f(mb)");
}

TEST_CASE("alpha = 1 reduces to the ordinary integral") {
    for (const auto& entry : oracle::corpus()) {
        const fi::FunctionSpec f = fi::parse(entry.text);
        for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{0.3, 2.7}, std::pair{1.0, 4.0}}) {
            const double plain = fi::integrate(f, a, b, kQuad).value;
            CHECK(std::abs(fi::rl_left(f, {1.0, a, b}, b, kQuad) - plain) < 1e-9);
            CHECK(std::abs(fi::rl_right(f, {1.0, a, b}, a, kQuad) - plain) < 1e-9);
        }
    }
}

TEST_CASE("RL integrals match the oracle on the corpus") {
    for (const auto& entry : oracle::corpus()) {
        const fi::FunctionSpec f = fi::parse(entry.text);
        for (double alpha : {0.05, 0.5, 1.5, 3.0}) {
            INFO(entry.text << " alpha = " << alpha);
            CHECK(std::abs(fi::rl_left(f, {alpha, 0.5, 2.0}, 1.7, kQuad) - oracle::rl_left(entry.f, 0.5, 1.7, alpha)) <
                  1e-9);
            CHECK(std::abs(fi::rl_right(f, {alpha, 0.5, 2.0}, 0.9, kQuad) - oracle::rl_right(entry.f, 0.9, 2.0, alpha)) <
                  1e-9);
        }
    }
}

TEST_CASE("halving abs_tol never increases the error on the examples") {
    const fi::FunctionSpec sq = fi::parse("x^2");
    const fi::FunctionSpec ex = fi::parse("exp(x)");
    struct Example {
        std::function<double(const fi::QuadSettings&)> value;
        double exact;
    };
    const Example examples[] = {
        {[&](const fi::QuadSettings& s) { return fi::rl_left(sq, {0.5, 0.0, 1.0}, 1.0, s); }, 16.0 / (15.0 * sqrt_pi())},
        {[&](const fi::QuadSettings& s) { return fi::rl_right(sq, {0.5, 0.0, 1.0}, 0.0, s); }, 0.4 / sqrt_pi()},
        {[&](const fi::QuadSettings& s) { return fi::t_moment(sq, 0.0, 1.0, 1.0, 0.5, fi::Orientation::A, s); },
         16.0 / 15.0},
        // J_{0+}^2 exp(1) = ∫_0^1 (1-t) e^t dt = e - 2
        {[&](const fi::QuadSettings& s) { return fi::rl_left(ex, {2.0, 0.0, 1.0}, 1.0, s); }, std::numbers::e - 2.0},
        {[](const fi::QuadSettings& s) {
             return fi::kink_integral([](double) { return 1.0; }, 0.3, s);
         },
         (2.0 / 1.3) * (1.0 - std::pow(2.0, -0.3))},
    };
    for (std::size_t i = 0; i < std::size(examples); ++i) {
        INFO("example " << i);
        double previous = INFINITY;
        for (double tol = 1e-2; tol >= 1e-12; tol *= 0.5) {
            fi::QuadSettings s;
            s.abs_tol = tol;
            s.panel_order = 3;  // low order so the tolerance actually drives refinement
            const double err = std::abs(examples[i].value(s) - examples[i].exact);
            // rounding noise below 4 ulp of the value is not refinement error
            CHECK(err <= std::max(previous, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(examples[i].exact)));
            previous = err;
        }
    }
}

TEST_CASE("kink integrals") {
    const auto one = [](double) { return 1.0; };
    CHECK(std::abs(fi::kink_integral(one, 1.0, kQuad) - 0.5) < 1e-13);
    for (double alpha : {0.01, 0.2, 0.5, 1.0, 2.0, 7.5}) {
        INFO("alpha = " << alpha);
        CHECK(std::abs(fi::kink_integral(one, alpha, kQuad) - (2.0 / (alpha + 1.0)) * (1.0 - std::pow(2.0, -alpha)))
              < 1e-10);
        CHECK(std::abs(fi::signed_kink_integral(one, alpha, kQuad)) < 1e-12);
        for (const auto& entry : oracle::corpus()) {
            const auto g = [&](double t) { return entry.f(0.3 + 1.2 * t); };
            CHECK(std::abs(fi::kink_integral(g, alpha, kQuad) - oracle::abs_kink(g, alpha)) < 1e-9);
            CHECK(std::abs(fi::signed_kink_integral(g, alpha, kQuad) - oracle::signed_kink(g, alpha)) < 1e-9);
        }
    }
}

TEST_CASE("tiny orders keep the boundary layer") {
    // J_{0+}^α x^2 (1) = 2/Γ(3+α), J_{1-}^α x^2 (0) = 1/(Γ(α)(α+2))
    const fi::FunctionSpec sq = fi::parse("x^2");
    for (double alpha : {1e-7, 3e-5, 1e-3, 0.02, 0.09, 0.11}) {
        INFO("alpha = " << alpha);
        CHECK(std::abs(fi::rl_left(sq, {alpha, 0.0, 1.0}, 1.0, kQuad) - 2.0 / std::tgamma(3.0 + alpha)) < 1e-10);
        CHECK(std::abs(fi::rl_right(sq, {alpha, 0.0, 1.0}, 0.0, kQuad) - 1.0 / (std::tgamma(alpha) * (alpha + 2.0))) <
              1e-10);
        CHECK(std::abs(fi::t_moment(sq, 0.0, 1.0, 1.0, alpha, fi::Orientation::B, kQuad) - 1.0 / (alpha + 2.0)) < 1e-10);
    }
}
