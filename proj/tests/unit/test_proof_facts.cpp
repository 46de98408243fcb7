#include "fracineq/error.hpp"
#include "fracineq/theorems.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

namespace fi = fracineq;

namespace {

const std::vector<double> kAlpha{0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
const std::vector<double> kAlpha1{0.25, 0.5, 0.75, 1.0};

std::string fact_id(const fi::CheckReport& r) {
    const std::string& n = r.notes.at(0);  // "fact <id> alpha = ..."
    return n.substr(5, n.find(' ', 5) - 5);
}

const fi::CheckReport& find(const std::vector<fi::CheckReport>& all, const std::string& id, double alpha,
                            std::optional<double> alpha1 = std::nullopt) {
    for (const auto& r : all)
        if (fact_id(r) == id && r.inputs.alpha == alpha && r.inputs.alpha1 == alpha1) return r;
    FAIL("missing fact " << id);
    return all.front();
}

} // namespace

TEST_CASE("default grids: unconditional facts pass") {
    const auto start = std::chrono::steady_clock::now();
    const auto all = fi::run_proof_fact_suite(kAlpha, kAlpha1);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
    std::size_t informational = 0;
    for (const auto& r : all) {
        INFO(r.notes.at(0));
        CHECK(r.theorem_id == fi::TheoremId::FACTS);
        if (r.informational) {
            ++informational;
            continue;
        }
        CHECK(r.status == fi::Status::Verified);
    }
    // vi-sym off the diagonal: 7 * 4 pairs minus the 4 diagonal ones
    CHECK(informational == kAlpha.size() * kAlpha1.size() - 4);
}

TEST_CASE("closed forms against oracle quadrature") {
    const auto all = fi::run_proof_fact_suite(kAlpha, kAlpha1);
    for (double a : kAlpha) {
        INFO("alpha = " << a);
        const double i = oracle::integrate([a](double t) { return std::pow(1.0 - t, a) * t; }, 0.0, 0.5);
        const double ii = oracle::integrate([a](double t) { return std::pow(t, a + 1.0); }, 0.0, 0.5);
        const double iii = oracle::integrate([a](double t) { return std::pow(1.0 - t, a + 1.0); }, 0.0, 0.5);
        const double iv = oracle::integrate([a](double t) { return std::pow(t, a) * (1.0 - t); }, 0.0, 0.5);
        const double v = oracle::abs_kink([](double) { return 1.0; }, a);
        CHECK(std::abs(find(all, "i", a).rhs - i) < 1e-12);
        CHECK(std::abs(find(all, "ii", a).rhs - ii) < 1e-12);
        CHECK(std::abs(find(all, "iii", a).rhs - iii) < 1e-12);
        CHECK(std::abs(find(all, "iv", a).rhs - iv) < 1e-12);
        CHECK(std::abs(find(all, "v", a).rhs - v) < 1e-12);
        CHECK(find(all, "i", a).margin <= 1e-10);
        CHECK(find(all, "v", a).margin <= 1e-10);
        if (a <= 1.0) {
            const fi::CheckReport& vii = find(all, "vii", a);
            CHECK(vii.status == fi::Status::Verified);
            CHECK(vii.lhs <= 1e-10);
        }
    }
    CHECK(find(all, "v", 1.0).lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(find(all, "i", 1.0).rhs == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("fact vi: incomplete beta and half-interval symmetry") {
    const auto all = fi::run_proof_fact_suite({0.5, 0.9, 1.0}, {0.5, 0.9, 1.0});
    for (double a : {0.5, 0.9, 1.0}) {
        for (double a1 : {0.5, 0.9, 1.0}) {
            INFO("alpha = " << a << " alpha1 = " << a1);
            const fi::CheckReport& ib = find(all, "vi-ib", a, a1);
            CHECK(ib.status == fi::Status::Verified);
            CHECK(std::abs(ib.rhs - oracle::incomplete_beta(0.5, a1 + 1.0, a + 1.0)) < 1e-12);
            const fi::CheckReport& sym = find(all, "vi-sym", a, a1);
            const double lower = oracle::integrate([&](double t) { return std::pow(t, a1) * std::pow(1 - t, a); }, 0.0, 0.5);
            const double upper = oracle::integrate([&](double t) { return std::pow(t, a1) * std::pow(1 - t, a); }, 0.5, 1.0);
            CHECK(std::abs(sym.margin - std::abs(lower - upper)) < 1e-12);
            if (a == a1) {
                CHECK_FALSE(sym.informational);
                CHECK(sym.status == fi::Status::Verified);
            } else {
                CHECK(sym.informational);
                CHECK(sym.status == fi::Status::Violated);
                CHECK(sym.margin > 1e-4);
            }
        }
    }
}

TEST_CASE("Holder fact is only asserted for alpha <= 1") {
    const auto all = fi::run_proof_fact_suite({0.3, 1.5}, {1.0});
    bool saw_big = false;
    for (const auto& r : all) saw_big = saw_big || (fact_id(r) == "vii" && r.inputs.alpha == 1.5);
    CHECK_FALSE(saw_big);
    CHECK(find(all, "vii", 0.3).status == fi::Status::Verified);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(fi::run_proof_fact_suite({0.0}, {1.0}), fi::PreconditionError);
    CHECK_THROWS_AS(fi::run_proof_fact_suite({1.0}, {-1.0}), fi::PreconditionError);
}
