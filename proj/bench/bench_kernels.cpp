// Serial reference kernels against their OpenMP versions.
#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "schurlab/detident.hpp"
#include "schurlab/preserver.hpp"

using namespace schurlab;

namespace {

std::vector<Rational> exact_poly() { return {Rational(1), Rational(2), Rational(-1, 3), Rational(1), Rational(1, 2)}; }

TestFamily family(std::size_t n) { return TestFamily::make(Rational(1), Rational(1), TestFamily::geometric_u(n)); }

void BM_ExactScanSerial(benchmark::State& state) {
    const auto fam = family(static_cast<std::size_t>(state.range(0)));
    const auto grid = t_grid(Rational(1), 64);
    for (auto _ : state) benchmark::DoNotOptimize(hl_hypothesis_scan_serial(exact_poly(), fam, grid));
}

void BM_ExactScanParallel(benchmark::State& state) {
    const auto fam = family(static_cast<std::size_t>(state.range(0)));
    const auto grid = t_grid(Rational(1), 64);
    for (auto _ : state) benchmark::DoNotOptimize(hl_hypothesis_scan(exact_poly(), fam, grid));
}

void BM_NumericScanSerial(benchmark::State& state) {
    const auto fam = family(static_cast<std::size_t>(state.range(0)));
    const auto grid = t_grid(Rational(1), 400);
    const RealFunction f = [](double x) { return std::sqrt(x); };
    for (auto _ : state) benchmark::DoNotOptimize(hl_hypothesis_scan_serial(f, fam, grid));
}

void BM_NumericScanParallel(benchmark::State& state) {
    const auto fam = family(static_cast<std::size_t>(state.range(0)));
    const auto grid = t_grid(Rational(1), 400);
    const RealFunction f = [](double x) { return std::sqrt(x); };
    for (auto _ : state) benchmark::DoNotOptimize(hl_hypothesis_scan(f, fam, grid));
}

struct TsymmInput {
    SeriesFunction<Rational> f;
    std::vector<Rational> u, v;
};

TsymmInput tsymm_input(std::size_t n) {
    TsymmInput x;
    x.f = SeriesFunction<Rational>::from_polynomial({Rational(1), Rational(-2), Rational(3), Rational(1), Rational(-1),
                                                     Rational(2), Rational(1)});
    for (std::size_t i = 0; i < n; ++i) {
        x.u.emplace_back(static_cast<long>(i) + 1);
        x.v.emplace_back(2 - static_cast<long>(i));
    }
    return x;
}

void BM_TsymmSerial(benchmark::State& state) {
    const auto x = tsymm_input(static_cast<std::size_t>(state.range(0)));
    using S = std::span<const Rational>;
    for (auto _ : state) benchmark::DoNotOptimize(tsymm_rhs_serial(x.f, S(x.u), S(x.v), 12));
}

void BM_TsymmParallel(benchmark::State& state) {
    const auto x = tsymm_input(static_cast<std::size_t>(state.range(0)));
    using S = std::span<const Rational>;
    for (auto _ : state) benchmark::DoNotOptimize(tsymm_rhs(x.f, S(x.u), S(x.v), 12));
}

}  // namespace

BENCHMARK(BM_ExactScanSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactScanParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericScanSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericScanParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TsymmSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TsymmParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
