#include "fracineq/convexity.hpp"
#include "fracineq/expr.hpp"
#include "fracineq/fracint.hpp"
#include "fracineq/specfun.hpp"
#include "fracineq/theorems.hpp"

#include <benchmark/benchmark.h>

namespace fi = fracineq;

static void BM_Gamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fi::gamma(x).value);
        x = x < 40.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_Gamma);

static void BM_IncompleteBeta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fi::incomplete_beta(0.5, 1.7, 2.3).value);
}
BENCHMARK(BM_IncompleteBeta);

static void BM_Parse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fi::parse("3*x^2.5 + 0.5*(exp(1.3*x) - 1) - ln(1 + x^2)/(2 + x)"));
}
BENCHMARK(BM_Parse);

static void BM_Evaluate(benchmark::State& state) {
    const fi::FunctionSpec f = fi::parse("3*x^2.5 + 0.5*(exp(1.3*x) - 1) - ln(1 + x^2)/(2 + x)");
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(x));
        x = x < 3.0 ? x + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_Evaluate);

static void BM_RlLeft(benchmark::State& state) {
    const fi::FunctionSpec f = fi::parse("x*exp(x)");
    const double alpha = static_cast<double>(state.range(0)) / 100.0;
    const fi::QuadSettings s;
    for (auto _ : state) benchmark::DoNotOptimize(fi::rl_left(f, {alpha, 0.0, 2.0}, 2.0, s));
}
BENCHMARK(BM_RlLeft)->Arg(1)->Arg(25)->Arg(50)->Arg(100)->Arg(250);

static void BM_CertifyMConvex(benchmark::State& state) {
    const fi::FunctionSpec f = fi::parse("x^2 + exp(x) - 1");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fi::certify_m_convex(f, 2.0, 0.7, n).holds);
    state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_CertifyMConvex)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CheckThm23(benchmark::State& state) {
    const fi::FunctionSpec f = fi::parse("x^2 + x");
    const fi::CheckSettings s;
    for (auto _ : state) benchmark::DoNotOptimize(fi::check_thm_2_3(f, 0.2, 1.5, 0.8, 0.6, s).margin);
}
BENCHMARK(BM_CheckThm23)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
