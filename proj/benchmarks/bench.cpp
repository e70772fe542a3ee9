// Rough cost profile of the two engines and the series evaluators. The exact
// engine is the pacing item (rational arithmetic blows up with n); the ball
// engine scales near-linearly until the radii force a retry.

#include "orthoseq/ball_table.hpp"
#include "orthoseq/dirichlet.hpp"
#include "orthoseq/exact.hpp"
#include "orthoseq/gfun.hpp"
#include "orthoseq/k_estimate.hpp"

#include <benchmark/benchmark.h>

using namespace orthoseq;

namespace {

void BM_exact_table(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        ExactTable t = exact_coefficients(n);
        benchmark::DoNotOptimize(t.coeffs.back());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_exact_table)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ball_table(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        BallTable t = ball_coefficients(n);
        benchmark::DoNotOptimize(t.coeffs.back());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ball_table)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity();

const BallTable& shared_table() {
    static BallTable t = ball_coefficients(2000);
    return t;
}

void BM_g_series(benchmark::State& state) {
    Ball t = Ball::exact_double(0.3, 128);
    for (auto _ : state)
        benchmark::DoNotOptimize(G(state.range(0), t));
}
BENCHMARK(BM_g_series)->Arg(0)->Arg(10)->Arg(100);

void BM_g_closed_form(benchmark::State& state) {
    Ball t = Ball::exact_double(0.9, 128);
    for (auto _ : state)
        benchmark::DoNotOptimize(G(state.range(0), t));
}
BENCHMARK(BM_g_closed_form)->Arg(0)->Arg(10)->Arg(100);

void BM_functional_residual(benchmark::State& state) {
    const BallTable& t = shared_table();
    Ball x = Ball::exact_double(0.5, static_cast<mpfr_prec_t>(t.precision_bits));
    for (auto _ : state)
        benchmark::DoNotOptimize(functional_equation_residual(t, x, 2000));
    state.SetLabel("t=0.5 N=2000");
}
BENCHMARK(BM_functional_residual)->Unit(benchmark::kMillisecond);

void BM_dirichlet_partial(benchmark::State& state) {
    const BallTable& t = shared_table();
    for (auto _ : state)
        benchmark::DoNotOptimize(dirichlet_partial(t, 0.5, 0, 2000));
    state.SetLabel("s=1/2 N=2000");
}
BENCHMARK(BM_dirichlet_partial)->Unit(benchmark::kMillisecond);

void BM_k_estimate(benchmark::State& state) {
    const BallTable& t = shared_table();
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_K(t));
}
BENCHMARK(BM_k_estimate)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
