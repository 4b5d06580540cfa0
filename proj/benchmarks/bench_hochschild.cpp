#include <benchmark/benchmark.h>

#include "deforma/cohomology.hpp"
#include "deforma/deformation.hpp"
#include "deforma/gauge.hpp"

using namespace deforma;

namespace {

AlgebraStructure m2q() {
    AlgebraStructure a(4);
    auto id = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t s = 0; s < 2; ++s)
                for (std::size_t t = 0; t < 2; ++t)
                    if (c == s) a.gamma(id(r, c), id(s, t), id(r, t)) = Rational(1);
    return a;
}

AlgebraStructure qx3() {
    AlgebraStructure a(3);
    a.gamma(0, 0, 0) = Rational(1);
    a.gamma(0, 1, 1) = Rational(1);
    a.gamma(1, 0, 1) = Rational(1);
    a.gamma(0, 2, 2) = Rational(1);
    a.gamma(2, 0, 2) = Rational(1);
    a.gamma(1, 1, 2) = Rational(1);
    return a;
}

} // namespace

static void BM_DifferentialMatrix(benchmark::State& state) {
    auto a = m2q();
    for (auto _ : state) {
        auto m = differential_matrix(a, state.range(0));
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_DifferentialMatrix)->Arg(1)->Arg(2);

static void BM_CohomologyDegree2(benchmark::State& state) {
    auto a = state.range(0) == 4 ? m2q() : qx3();
    for (auto _ : state) {
        auto h = cohomology(a, 2);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_CohomologyDegree2)->Arg(3)->Arg(4);

static void BM_GerstenhaberBracket(benchmark::State& state) {
    auto a = m2q();
    Cochain mu = Cochain::multiplication(a);
    Cochain f(3, 4);
    f.flat_coeffs()[17] = Rational(2, 3);
    f.flat_coeffs()[101] = Rational(-1, 2);
    for (auto _ : state) {
        Cochain b = gerstenhaber_bracket(mu, f);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_GerstenhaberBracket);

static void BM_GaugeApplyOrder3(benchmark::State& state) {
    auto a = qx3();
    TruncatedDeformation d = TruncatedDeformation::trivial(a, 3);
    GaugeElement x = GaugeElement::zero(3, 3);
    x.terms[0].coeff({0}, 1) = Rational(1, 2);
    x.terms[1].coeff({1}, 2) = Rational(-1, 3);
    x.terms[2].coeff({2}, 0) = Rational(2);
    for (auto _ : state) {
        auto moved = gauge_apply(x, d);
        benchmark::DoNotOptimize(moved);
    }
}
BENCHMARK(BM_GaugeApplyOrder3);
