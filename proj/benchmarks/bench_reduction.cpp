// Microbenchmarks comparing the four reduction strategies on Rips
// filtrations of random point clouds. The interesting comparison is
// row-on-boundary + compress against column-on-coboundary + clear: the two
// perform mirror-image work.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lowleft/builders.hpp"
#include "lowleft/reduction.hpp"

using namespace lowleft;

namespace {

filtration rips_fixture(int n_points) {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<value_t> coord(0.0, 1.0);
    std::vector<std::vector<value_t>> points;
    points.reserve(static_cast<std::size_t>(n_points));
    for (int p = 0; p < n_points; ++p) points.push_back({coord(rng), coord(rng), coord(rng)});
    return build_rips(distance_matrix::from_points(points), 2, 0.7);
}

void run_fixture(benchmark::State& state, orientation orient, optimization optim) {
    const auto f = rips_fixture(static_cast<int>(state.range(0)));
    std::int64_t additions = 0;
    for (auto _ : state) {
        auto res = run_strategy(f, {orient, optim});
        additions = res.stats.additions;
        benchmark::DoNotOptimize(res.pairs.data());
    }
    state.counters["simplices"] = static_cast<double>(f.size());
    state.counters["additions"] = static_cast<double>(additions);
}

void BM_col_boundary(benchmark::State& state) {
    run_fixture(state, orientation::col_boundary, optimization::none);
}
void BM_col_boundary_clear(benchmark::State& state) {
    run_fixture(state, orientation::col_boundary, optimization::clear);
}
void BM_col_coboundary_clear(benchmark::State& state) {
    run_fixture(state, orientation::col_coboundary, optimization::clear);
}
void BM_row_boundary(benchmark::State& state) {
    run_fixture(state, orientation::row_boundary, optimization::none);
}
void BM_row_boundary_compress(benchmark::State& state) {
    run_fixture(state, orientation::row_boundary, optimization::compress);
}
void BM_row_coboundary_compress(benchmark::State& state) {
    run_fixture(state, orientation::row_coboundary, optimization::compress);
}

} // namespace

BENCHMARK(BM_col_boundary)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_col_boundary_clear)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_col_coboundary_clear)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_row_boundary)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_row_boundary_compress)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_row_coboundary_compress)->Arg(15)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
