#include <benchmark/benchmark.h>

#include <random>

#include "siegel/cocycle.hpp"
#include "siegel/gauss.hpp"
#include "siegel/theta.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

namespace {

std::vector<IntegerSymplectic> words(std::size_t m, Subgroup which, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<IntegerSymplectic> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_word(m, which, 6, rng).element);
    return out;
}

}  // namespace

static void BM_ThetaHalf(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    const SiegelPoint z = random_siegel_point(m, rng);
    for (auto _ : state) benchmark::DoNotOptimize(theta_series(z, Weight::Half));
    state.counters["radius"] = theta_series(z, Weight::Half).radius;
}
BENCHMARK(BM_ThetaHalf)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_ThetaThreeHalf(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    const SiegelPoint z = random_siegel_point(m, rng);
    for (auto _ : state) benchmark::DoNotOptimize(theta_series(z, Weight::ThreeHalf));
}
BENCHMARK(BM_ThetaThreeHalf)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_RaoCocycle(benchmark::State& state) {
    const auto g = words(static_cast<std::size_t>(state.range(0)), Subgroup::Full, 64, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rao_cocycle(g[i % 64], g[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_RaoCocycle)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_BetaTilde(benchmark::State& state) {
    const auto g = words(static_cast<std::size_t>(state.range(0)), Subgroup::Theta, 64, 4);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(beta_tilde(g[i++ % 64]));
}
BENCHMARK(BM_BetaTilde)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_InducedRep(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const CosetTable table(m);
    const auto g = words(m, Subgroup::Full, 64, 5);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(induced_rep_matrix(table, {g[i++ % 64], 1}));
}
BENCHMARK(BM_InducedRep)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_CosetTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(CosetTable(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CosetTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
