#include <benchmark/benchmark.h>

#include <cstdint>

#include "relspeed/relspeed.hpp"

namespace {

void BM_KinematicState(benchmark::State& state) {
  const relspeed::Beta beta = relspeed::beta_required(100.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relspeed::kinematic_state(beta));
  }
}
BENCHMARK(BM_KinematicState);

void BM_PlanInertial(benchmark::State& state) {
  const relspeed::ComputationSpec spec{state.range(0), 1.0, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(relspeed::plan_inertial(spec));
  }
}
BENCHMARK(BM_PlanInertial)->Arg(100)->Arg(1000000);

void BM_SolveAcceleration(benchmark::State& state) {
  const relspeed::ComputationSpec spec{state.range(0), 1.0, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(relspeed::solve_acceleration(spec));
  }
}
BENCHMARK(BM_SolveAcceleration)->Arg(100)->Arg(1000000);

void BM_ClocksFromDistance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(relspeed::clocks_from_distance(9.8, 1.0e4));
  }
}
BENCHMARK(BM_ClocksFromDistance);

void BM_IntegrateWorldline(benchmark::State& state) {
  const relspeed::AccelPlan plan = relspeed::path2_itinerary(1.0, 4.0);
  const double step = 4.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        relspeed::integrate_worldline(plan.legs, 0.0, step));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateWorldline)->Arg(1000)->Arg(100000);

void BM_SweepTable(benchmark::State& state) {
  const std::int64_t queries[] = {10, 100, 1000, 10000, 100000, 1000000};
  const double orders[] = {1.0, 1.5, 2.0, 2.5, 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(relspeed::sweep_table(queries, orders));
  }
}
BENCHMARK(BM_SweepTable);

}  // namespace

BENCHMARK_MAIN();
