//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak_bench.cc
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include "qcloak/designer/Robustness.hh"
#include "qcloak/fields/FieldGrid.hh"
#include "qcloak/fields/FluxIntegrals.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/specfun/SphericalBessel.hh"

namespace
{
using namespace qcloak;

LayerStack cloak_stack()
{
    LayerStack s;
    s.background = {0.8, 0.0};
    s.energy_eV = 0.01;
    s.layers = {{{0.16, -2.34}, 2.0}, {{0.33, 16.21}, 1.7}};
    return s;
}

void BM_SphericalBesselAll(benchmark::State& state)
{
    complex_type const z{12.5, state.range(0) ? 40.0 : 0.4};
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sph_bessel_j_all(20, z));
        benchmark::DoNotOptimize(sph_hankel1_all(20, z));
    }
}
BENCHMARK(BM_SphericalBesselAll)->Arg(0)->Arg(1);

void BM_SolveTwoLayer(benchmark::State& state)
{
    auto const s = cloak_stack();
    int const l = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_two_layer(s, l));
}
BENCHMARK(BM_SolveTwoLayer)->Arg(0)->Arg(4);

void BM_SolveNLayerHidden(benchmark::State& state)
{
    auto s = cloak_stack();
    s.layers.push_back({{0.055, -9000.0}, 1.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_n_layer(s, 2));
}
BENCHMARK(BM_SolveNLayerHidden);

void BM_CrossSection(benchmark::State& state)
{
    auto const s = cloak_stack();
    for (auto _ : state)
        benchmark::DoNotOptimize(cross_section(s));
}
BENCHMARK(BM_CrossSection);

void BM_FluxFraction(benchmark::State& state)
{
    auto const s = cloak_stack();
    FieldEvaluator const field(solve_partial_waves(s, field_order(s, 2.0, 4)));
    for (auto _ : state)
        benchmark::DoNotOptimize(flux_through_shell_annulus(field));
}
BENCHMARK(BM_FluxFraction)->Unit(benchmark::kMillisecond);

void BM_FieldGrid(benchmark::State& state)
{
    auto const s = cloak_stack();
    FieldEvaluator const field(solve_partial_waves(s, field_order(s, 4.3, 4)));
    auto const plane = PlaneSpec::parse("x=0");
    int const n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(export_field_grid(field, plane, n, 1));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_FieldGrid)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
