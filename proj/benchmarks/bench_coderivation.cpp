#include <benchmark/benchmark.h>

#include "deforma/coderivation.hpp"

using namespace deforma;

namespace {

std::map<std::size_t, GradedMultilinearMap> qx3_mult_ops(const GradedSpace& v) {
    GradedMultilinearMap mu2(2, 0, v, v);
    auto set = [&mu2](std::size_t i, std::size_t j, std::size_t l) {
        Vec out(3);
        out[l] = Rational(1);
        mu2.set({BasisRef{0, i}, BasisRef{0, j}}, out);
    };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(0, 2, 2);
    set(2, 0, 2);
    set(1, 1, 2);
    std::map<std::size_t, GradedMultilinearMap> ops;
    ops.emplace(2, mu2);
    return ops;
}

} // namespace

static void BM_LiftTensor(benchmark::State& state) {
    GradedSpace v(std::map<int, std::size_t>{{0, 3}});
    auto ops = qx3_mult_ops(v);
    for (auto _ : state) {
        auto lift = lift_to_coderivation(ops, v, CoalgebraFlavor::tensor, state.range(0));
        benchmark::DoNotOptimize(lift);
    }
}
BENCHMARK(BM_LiftTensor)->Arg(3)->Arg(4)->Arg(5);

static void BM_CoderivationBracket(benchmark::State& state) {
    GradedSpace v(std::map<int, std::size_t>{{0, 3}});
    auto ops = qx3_mult_ops(v);
    auto t = lift_to_coderivation(ops, v, CoalgebraFlavor::tensor, 4).coderivation;
    for (auto _ : state) {
        auto b = coderivation_bracket(t, t);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_CoderivationBracket);

BENCHMARK_MAIN();
