#include <benchmark/benchmark.h>

#include "lstc/spaces.hpp"
#include "lstc/tensor.hpp"

using namespace lstc;

static void BM_BuildFcpn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto pres = fcpn_presentation(n);
    for (auto _ : state) {
        auto algebra = QuotientAlgebra::build(pres);
        benchmark::DoNotOptimize(algebra);
    }
}
BENCHMARK(BM_BuildFcpn)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_NormalFormTop(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto A = QuotientAlgebra::build(fcpn_presentation(n));
    // reduce the full degree-2n monomial list, the widest graded piece
    const auto monomials = A.monomials_of_degree(2 * n);
    for (auto _ : state) {
        for (const auto& m : monomials) {
            auto nf = A.monomial_element(m);
            benchmark::DoNotOptimize(nf);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(monomials.size()));
}
BENCHMARK(BM_NormalFormTop)->Arg(4)->Arg(8)->Arg(16);

static void BM_TensorPower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto A = QuotientAlgebra::build(fcpn_presentation(n));
    const auto zd = zero_divisor(A, "a1");
    for (auto _ : state) {
        auto power = t_power(A, zd, 2 * n - 1);
        benchmark::DoNotOptimize(power);
    }
}
BENCHMARK(BM_TensorPower)->Arg(2)->Arg(4)->Arg(8);

static void BM_Zcl(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto A = QuotientAlgebra::build(fcpn_presentation(n));
    for (auto _ : state) {
        auto result = zcl(A);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Zcl)->Arg(2)->Arg(4)->Arg(8);

static void BM_FullReport(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto space = fcpn_space(n);
    for (auto _ : state) {
        auto rep = report(space);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_FullReport)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
