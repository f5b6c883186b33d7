// Microbenchmarks for the hot paths: pairwise lifetime prediction, full
// matrix builds, and the route solvers.

#include <benchmark/benchmark.h>

#include <vector>

#include "opar/lifetime_matrix.hpp"
#include "opar/optimizer.hpp"
#include "opar/rng.hpp"
#include "opar/simulator.hpp"

namespace {

using namespace opar;

KinematicState random_state(RandomStream& rng) {
    const Position3D pos{rng.uniform(0, 300), rng.uniform(0, 2000), rng.uniform(0, 50)};
    const double vx = rng.uniform(-50, 50);
    const double vy = rng.uniform(-50, 50);
    const double vz = rng.uniform(-5, 5);
    const auto at = [&](double t) {
        return PositionSample{{pos.x + vx * t, pos.y + vy * t, pos.z + vz * t}, t};
    };
    return KinematicState::from_samples(at(-0.6), at(-0.3), at(0.0));
}

std::vector<KinematicState> random_states(int n, std::uint64_t seed) {
    RandomStream rng(seed, 77);
    std::vector<KinematicState> states;
    states.reserve(n);
    for (int i = 0; i < n; ++i) {
        states.push_back(random_state(rng));
    }
    return states;
}

LifetimeMatrix random_matrix(int nodes, double density, RandomStream& rng) {
    LifetimeMatrix matrix(nodes);
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            if (i != j && rng.uniform01() < density) {
                matrix.set(i, j, 100.0 * (1.0 - rng.uniform01()));
            }
        }
    }
    return matrix;
}

void BM_LinkLifetime(benchmark::State& state) {
    RandomStream rng(1, 0);
    const auto a = random_state(rng);
    const auto b = random_state(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(link_lifetime(a, b, 250.0, 500.0));
    }
}
BENCHMARK(BM_LinkLifetime);

void BM_BuildMatrix(benchmark::State& state) {
    const auto states = random_states(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_matrix(states, 250.0, 500.0));
    }
}
BENCHMARK(BM_BuildMatrix)->Arg(25)->Arg(50)->Arg(100);

void BM_OparSolve(benchmark::State& state) {
    RandomStream rng(7, 0);
    const int n = static_cast<int>(state.range(0));
    const auto matrix = random_matrix(n, 0.5, rng);
    const auto graph = to_graph(matrix);
    const Weights weights(0.7, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(opar_solve(graph, matrix, 0, n - 1, weights));
    }
}
BENCHMARK(BM_OparSolve)->Arg(10)->Arg(25)->Arg(50)->Arg(100);

void BM_BruteForce(benchmark::State& state) {
    RandomStream rng(7, 0);
    const int n = static_cast<int>(state.range(0));
    const auto matrix = random_matrix(n, 0.5, rng);
    const auto graph = to_graph(matrix);
    const Weights weights(0.7, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_optimal(graph, matrix, 0, n - 1, weights));
    }
}
BENCHMARK(BM_BruteForce)->Arg(8)->Arg(10);

void BM_RunScenario(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.n_uavs = static_cast<int>(state.range(0));
    cfg.volume = {300.0, 1000.0, 50.0};
    cfg.n_flows = 3;
    cfg.file_size = 2'000'000;
    cfg.sim_time = 60.0;
    cfg.weights = Weights(0.7, 0.3);
    cfg.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_scenario(cfg));
    }
}
BENCHMARK(BM_RunScenario)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
