#include <benchmark/benchmark.h>

#include <random>

#include "dqca/evolve.hpp"
#include "dqca/pathsum.hpp"
#include "dqca/spectral.hpp"

namespace {

using namespace dqca;

FieldState seeded_state(int n_cells) {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FieldState s = FieldState::zero(n_cells);
  for (int i = 0; i < n_cells; ++i) {
    s.plus[i] = {gauss(rng), gauss(rng)};
    s.minus[i] = {gauss(rng), gauss(rng)};
  }
  const double norm = s.norm();
  s.plus /= norm;
  s.minus /= norm;
  return s;
}

void TwoStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = make_step_operator(params_from_mass_ratio(0.35, n));
  FieldState s = seeded_state(n);
  for (auto _ : state) {
    advance_two_step(s, op);
    benchmark::DoNotOptimize(s.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(TwoStep)->RangeMultiplier(4)->Range(256, 65536);

void BackwardTwoStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = make_step_operator(params_from_mass_ratio(0.35, n));
  FieldState s = seeded_state(n);
  for (auto _ : state) {
    retreat_two_step(s, op);
    benchmark::DoNotOptimize(s.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BackwardTwoStep)->Arg(4096);

void DispersionSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto params = params_from_mass_ratio(0.5, n);
  const auto gp = solve_gates(params);
  const auto grid = momentum_grid(params);
  for (auto _ : state) {
    auto pts = dispersion(gp, params, grid);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(DispersionSweep)->Arg(1024)->Arg(4096);

void PathEnumeration(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto op = make_step_operator(params_from_mass_ratio(0.35, 16));
  for (auto _ : state) {
    auto paths = enumerate_forward(op, 5, depth);
    benchmark::DoNotOptimize(paths.data());
  }
}
BENCHMARK(PathEnumeration)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
