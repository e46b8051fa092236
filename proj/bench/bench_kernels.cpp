#include <benchmark/benchmark.h>

#include "higgs/bargmann.hpp"
#include "higgs/zoo.hpp"

using namespace higgs;

namespace {

const DeformationParams kParams = DeformationParams::make(0.6, 3.0);

void bm_to_matrix(benchmark::State& state, Exec exec) {
    const auto basis = MonomialBasis::make(static_cast<int>(state.range(0)));
    const auto h1 = build_h1_algebraic(kParams);
    for (auto _ : state) {
        auto mat = to_matrix(h1, basis, exec);
        benchmark::DoNotOptimize(mat.entries.data());
    }
}

void bm_spectrum(benchmark::State& state, Exec exec) {
    const auto basis = MonomialBasis::make(static_cast<int>(state.range(0)));
    const auto mat = to_matrix(build_h1_algebraic(kParams), basis);
    for (auto _ : state) {
        auto report = spectrum(mat, kParams, exec);
        benchmark::DoNotOptimize(report.eigenvalues.data());
    }
}

void bm_scan(benchmark::State& state, Exec exec) {
    std::vector<double> grid;
    for (double c = -2.0; c <= 5.0; c += 7.0 / state.range(0))
        grid.push_back(c);
    for (auto _ : state) {
        auto report = degeneracy_scan(4, 0.6, grid, exec);
        benchmark::DoNotOptimize(report.rows.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_to_matrix, serial, Exec::serial)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_to_matrix, parallel, Exec::parallel)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_spectrum, serial, Exec::serial)->Arg(24)->Arg(40);
BENCHMARK_CAPTURE(bm_spectrum, parallel, Exec::parallel)->Arg(24)->Arg(40);
BENCHMARK_CAPTURE(bm_scan, serial, Exec::serial)->Arg(64);
BENCHMARK_CAPTURE(bm_scan, parallel, Exec::parallel)->Arg(64);

BENCHMARK_MAIN();
