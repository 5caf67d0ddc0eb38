#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "flsim/runs.hpp"

using namespace flsim;

namespace {

Scenario six_beam_scenario(std::uint64_t rays) {
  Scenario sc = load_scenario(FLSIM_SCENARIO_DIR "/scenario1.yaml");
  sc.sonar.beams.clear();
  for (double deg : {-25.0, -15.0, -5.0, 5.0, 15.0, 25.0}) {
    sc.sonar.beams.push_back({deg * std::numbers::pi / 180.0, 0.0});
  }
  sc.sonar.num_rays = rays;
  return sc;
}

void BM_PingSixBeams(benchmark::State& state) {
  const Scenario sc = six_beam_scenario(static_cast<std::uint64_t>(state.range(0)));
  std::uint64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ping(sc.scene, sc.env, sc.sonar, sc.pose, sc.transmitter, k++, sc.sim));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PingSixBeams)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_NullModelScenarioOne(benchmark::State& state) {
  const Scenario sc = load_scenario(FLSIM_SCENARIO_DIR "/scenario1.yaml");
  for (auto _ : state) benchmark::DoNotOptimize(compute_nulls(sc));
}
BENCHMARK(BM_NullModelScenarioOne)->Unit(benchmark::kMillisecond);

void BM_HeightfieldTrace(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(n), ys(n), depths(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -50.0 + 100.0 * i / (n - 1);
    ys[i] = xs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      depths[j * n + i] = 12.0 + std::sin(0.3 * xs[i]) * std::cos(0.2 * ys[j]);
    }
  }
  Scene scene;
  scene.bottom = Heightfield(xs, ys, depths);
  const auto dirs = sample_ray_directions(4096, 3);
  std::size_t k = 0, hits = 0;
  for (auto _ : state) {
    Ray r;
    r.origin = {0.0, 0.0, 7.0};
    r.direction = dirs[k++ % dirs.size()];
    r.remaining_range_m = 50.0;
    hits += trace_ray(scene, r).has_value();
  }
  benchmark::DoNotOptimize(hits);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HeightfieldTrace)->Arg(33)->Arg(257);

}  // namespace

BENCHMARK_MAIN();
