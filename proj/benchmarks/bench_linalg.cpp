#include <benchmark/benchmark.h>

#include <random>

#include "deforma/matrix.hpp"

using namespace deforma;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

static void BM_Rref(benchmark::State& state) {
    auto m = random_matrix(state.range(0), state.range(0), 7);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Kernel(benchmark::State& state) {
    auto m = random_matrix(state.range(0), 2 * state.range(0), 8);
    for (auto _ : state) {
        auto k = kernel(m);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(32);

static void BM_SolveParticular(benchmark::State& state) {
    auto m = random_matrix(state.range(0), state.range(0), 9);
    Vec x(state.range(0));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = Rational((long)i, 3);
    Vec b = m.apply(x);
    for (auto _ : state) {
        auto s = solve_particular(m, b);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SolveParticular)->Arg(16)->Arg(32);
