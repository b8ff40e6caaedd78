#include <benchmark/benchmark.h>

#include "fbgdirac/bands.hpp"
#include "fbgdirac/builders.hpp"
#include "fbgdirac/tamm.hpp"
#include "fbgdirac/tmm.hpp"

#include <numbers>
#include <vector>

using namespace fbgdirac;

namespace {

const DiracParams kLatticeParams{1.0, std::numbers::pi / 2.0, 2.0, {}};

KpGratingSpec reference_kp_spec()
{
    KpGratingSpec spec;
    spec.m0 = 1.0;
    spec.V0 = std::numbers::pi / 2.0;
    spec.a = 2.0;
    spec.L = 50.0;
    return spec;
}

void BM_DispersionRhs(benchmark::State& state)
{
    double E = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dispersion_rhs(E, kLatticeParams));
        E += 1e-3;
        if (E > 6.0) {
            E = -6.0;
        }
    }
}
BENCHMARK(BM_DispersionRhs);

void BM_FindBands(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_bands(kLatticeParams, -6.0, 6.0));
    }
}
BENCHMARK(BM_FindBands)->Unit(benchmark::kMillisecond);

void BM_FindTammStates(benchmark::State& state)
{
    const DiracParams p{1.0, std::numbers::pi / 2.0, 2.0, 0.8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_tamm_states(p));
    }
}
BENCHMARK(BM_FindTammStates)->Unit(benchmark::kMillisecond);

void BM_SegmentMatrix(benchmark::State& state)
{
    const Segment s{2.0, 1.0, 0.3};
    double E = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(segment_matrix(s, E));
        E += 1e-3;
        if (E > 3.0) {
            E = -3.0;
        }
    }
}
BENCHMARK(BM_SegmentMatrix);

void BM_BuildKpGrating(benchmark::State& state)
{
    auto spec = reference_kp_spec();
    spec.segments_per_ramp = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kp_grating(spec));
    }
}
BENCHMARK(BM_BuildKpGrating)->Arg(400)->Arg(2500)->Unit(benchmark::kMillisecond);

void BM_Scattering(benchmark::State& state)
{
    const auto g = build_kp_grating(reference_kp_spec());
    double E = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scattering(g, E));
        E += 0.37;
        if (E > 6.0) {
            E = -6.0;
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.elements.size()));
}
BENCHMARK(BM_Scattering);

void BM_Sweep(benchmark::State& state)
{
    const auto g = build_kp_grating(reference_kp_spec());
    std::vector<double> grid;
    const int n = static_cast<int>(state.range(0));
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        grid.push_back(-6.0 + 12.0 * i / (n - 1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(g, grid));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Sweep)->Arg(401)->Arg(4001)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
