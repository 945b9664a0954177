#include <benchmark/benchmark.h>
#include <mmf/minimal.hpp>
#include <mmf/mlde.hpp>

using namespace mmf;

namespace {

void BM_eta(benchmark::State& state) {
    long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eta(prec));
}
BENCHMARK(BM_eta)->Arg(100)->Arg(500);

void BM_series_mul(benchmark::State& state) {
    long prec = state.range(0);
    QSeries a = eisenstein(4, prec);
    QSeries b = eisenstein(6, prec);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(100)->Arg(400);

void BM_eta_pow(benchmark::State& state) {
    long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eta_pow(rat(3, 7), prec));
}
BENCHMARK(BM_eta_pow)->Arg(100)->Arg(300);

void BM_scaled_character(benchmark::State& state) {
    long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(scaled_character(7, 2, prec));
}
BENCHMARK(BM_scaled_character)->Arg(100)->Arg(300);

void BM_fit_mlde_p5(benchmark::State& state) {
    std::vector<QSeries> sols = {scaled_character(5, 1, 80), scaled_character(5, 2, 80)};
    for (auto _ : state) benchmark::DoNotOptimize(fit_mlde(rat(1, 5), sols, 2));
}
BENCHMARK(BM_fit_mlde_p5);

void BM_verify_identity(benchmark::State& state) {
    const auto& id = identities_5_15()[1];
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(id.lhs, id.rhs, 60));
}
BENCHMARK(BM_verify_identity);

} // namespace

BENCHMARK_MAIN();
