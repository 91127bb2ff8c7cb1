#include <benchmark/benchmark.h>

#include <random>

#include "jc/cohom.hpp"
#include "jc/exactla.hpp"
#include "jc/jacquet.hpp"

namespace {

jc::la::SparseMatrix randomMatrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    jc::la::SparseMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, jc::la::Rational(num(rng), den(rng)));
    }
    return m;
}

void BM_Kernel(benchmark::State& state) {
    const auto m = randomMatrix(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(jc::la::kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(16)->Arg(32);

void BM_Cohomology(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto m = jc::sl2::nFiniteDual(jc::sl2::verma(-k, static_cast<std::size_t>(k + 64)));
    for (auto _ : state) benchmark::DoNotOptimize(jc::cohom::cohomology(m, jc::cohom::Direction::NBar));
}
BENCHMARK(BM_Cohomology)->Arg(0)->Arg(8)->Arg(32);

void BM_JacquetPipeline(benchmark::State& state) {
    jc::jacquet::InducedRepSpec spec;
    spec.family = static_cast<jc::jacquet::ModuleFamily>(state.range(0));
    spec.k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(jc::jacquet::assembleLES(spec));
}
BENCHMARK(BM_JacquetPipeline)->Args({0, 8})->Args({1, 8})->Args({2, 8})->Args({0, 24});

}  // namespace

// Own main: the packaged benchmark_main archive carries LTO bytecode from another compiler build.
BENCHMARK_MAIN();
