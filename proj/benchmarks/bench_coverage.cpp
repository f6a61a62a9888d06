#include <benchmark/benchmark.h>

#include <vector>

#include "uavcov/coverage.hpp"
#include "uavcov/derive.hpp"
#include "uavcov/mc_oracle.hpp"
#include "uavcov/scenario.hpp"

using namespace uavcov;

namespace {

CoverageModel toy()
{
    CoverageModel m;
    m.serving = {2e-4, 1.0};
    m.interferers = {{1e-2, 1.0}};
    m.alpha = 4.0;
    return m;
}

void BM_ClosedFormSweep(benchmark::State& state)
{
    const CoverageModel m = derive_model(preset("fig1a_irs_0.1W")).model;
    const std::vector<double> grid = threshold_grid(-10, 30, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(m, grid, Method::closed_form));
    }
}
BENCHMARK(BM_ClosedFormSweep);

void BM_IntegralSweep(benchmark::State& state)
{
    const CoverageModel m = derive_model(preset("fig1a_irs_0.1W")).model;
    const std::vector<double> grid = threshold_grid(-10, 30, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(m, grid, Method::integral));
    }
}
BENCHMARK(BM_IntegralSweep);

void BM_DeriveModel(benchmark::State& state)
{
    const Scenario s = preset("fig3d_100GHz");
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_model(s));
    }
}
BENCHMARK(BM_DeriveModel);

void BM_MonteCarloTrials(benchmark::State& state)
{
    const CoverageModel m = toy();
    McOptions opt;
    opt.trials = static_cast<std::uint64_t>(state.range(0));
    opt.placement = ServingPlacement::random_ppp;
    opt.radius_m = 60.0;
    opt.enforce_tail_bound = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(empirical_coverage(m, opt));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloTrials)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
