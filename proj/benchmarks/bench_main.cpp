#include <benchmark/benchmark.h>

#include <filesystem>

#include "vfc/config_io.hpp"
#include "vfc/dynamics.hpp"
#include "vfc/game.hpp"
#include "vfc/metrics.hpp"
#include "vfc/oracle.hpp"
#include "vfc/stage_game.hpp"

using namespace vfc;

namespace {

ExperimentSpec bundled(const char* name) {
  return load_config(std::filesystem::path(VFC_CONFIG_DIR) / name, true);
}

}  // namespace

static void BM_RunHeadlineGame(benchmark::State& state) {
  const GameConfig game = bundled("paper-fig2.json").variants.front().game;
  for (auto _ : state) benchmark::DoNotOptimize(run_game(game).records.size());
  state.SetItemsProcessed(state.iterations() * game.horizon);
}
BENCHMARK(BM_RunHeadlineGame)->Unit(benchmark::kMillisecond);

static void BM_RegretSeries(benchmark::State& state) {
  const GameTrace trace = run_game(bundled("paper-fig2.json").variants.front().game);
  for (auto _ : state) benchmark::DoNotOptimize(regret_series(trace, 0).cumulative.back());
}
BENCHMARK(BM_RegretSeries)->Unit(benchmark::kMillisecond);

static void BM_ExpectedCost(benchmark::State& state) {
  const auto env = make_environment(bundled("paper-fig2.json").base);
  int c = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(env->expected_normalized_cost(0, 0, c, 1));
    c = c % 3 + 1;
  }
}
BENCHMARK(BM_ExpectedCost);

static void BM_StageGameOracles(benchmark::State& state) {
  const auto env = make_environment(bundled("paper-fig2.json").base);
  const StageGame game = stage_game_at(*env, env->horizon());
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_pure_nash(game).size());
    benchmark::DoNotOptimize(social_optimum(game).cost);
  }
}
BENCHMARK(BM_StageGameOracles)->Unit(benchmark::kMillisecond);

static void BM_Smoothness(benchmark::State& state) {
  const auto env = make_environment(bundled("paper-fig2.json").base);
  const StageGame game = stage_game_at(*env, 1001);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_constants(game).rho);
}
BENCHMARK(BM_Smoothness)->Unit(benchmark::kMillisecond);

static void BM_IntegrateToRest(benchmark::State& state) {
  const auto env = make_environment(bundled("paper-fig2.json").base);
  const StageGame game = stage_game_at(*env, 1);
  const std::vector<double> w(static_cast<std::size_t>(game.num_agents()), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_to_rest(game, uniform_profile(game), w).steps);
}
BENCHMARK(BM_IntegrateToRest)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
