// Scenario runner for the opar library: single runs, parameter sweeps, an
// optimizer-vs-enumeration audit, and trajectory dumps. All outputs are CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opar/config.hpp"
#include "opar/rng.hpp"
#include "opar/sweep.hpp"

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    out << text;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            values.push_back(item);
        }
    }
    return values;
}

// Random digraph over `nodes` vertices with the given edge probability and
// lifetimes uniform in (0, 100].
opar::LifetimeMatrix random_matrix(int nodes, double density, opar::RandomStream& rng) {
    opar::LifetimeMatrix matrix(nodes);
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            if (i != j && rng.uniform01() < density) {
                matrix.set(i, j, 100.0 * (1.0 - rng.uniform01()));
            }
        }
    }
    return matrix;
}

int run_oracle_check(int nodes, int trials, std::uint64_t seed) {
    opar::RandomStream rng(seed, 0x0cacc1eULL);
    int mismatches = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto matrix = random_matrix(nodes, rng.uniform(0.2, 0.8), rng);
        const auto graph = opar::to_graph(matrix);
        const int s = rng.uniform_int(0, nodes - 1);
        int d = rng.uniform_int(0, nodes - 1);
        if (d == s) {
            d = (d + 1) % nodes;
        }
        const double w1 = rng.uniform(0.05, 1.0);
        const opar::Weights weights(w1, 1.0 - w1);

        const auto fast = opar::opar_solve(graph, matrix, s, d, weights);
        const auto exact = opar::brute_force_optimal(graph, matrix, s, d, weights);
        if (fast.has_value() != exact.has_value()) {
            ++mismatches;
            continue;
        }
        if (fast && std::abs(objective(*fast, weights) - objective(*exact, weights)) > 1e-12) {
            ++mismatches;
        }
    }
    std::printf("oracle-check: %d/%d trials matched (%d nodes, seed %llu)\n",
                trials - mismatches, trials, nodes,
                static_cast<unsigned long long>(seed));
    return mismatches == 0 ? 0 : 1;
}

std::string dump_trajectory(const opar::ScenarioConfig& cfg, double duration) {
    std::ostringstream out;
    out << "time,node_id,x,y,z\n";
    opar::TrajectoryGenerator traj(cfg.n_uavs, cfg.mobility, cfg.volume, cfg.seed);
    const double sample_interval = cfg.report_interval / 3.0;
    const long samples = static_cast<long>(duration / sample_interval + 1e-9);
    char buf[160];
    for (long s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) * sample_interval;
        if (s > 0) {
            double stepped = (s - 1) * sample_interval;
            while (stepped < t - 1e-12) {
                const double dt = std::min(cfg.mobility.step_dt, t - stepped);
                traj.advance(dt);
                stepped += dt;
            }
        }
        for (int node = 0; node < cfg.n_uavs; ++node) {
            const auto p = traj.position(node);
            std::snprintf(buf, sizeof(buf), "%.6f,%d,%.6f,%.6f,%.6f\n", t, node, p.x, p.y,
                          p.z);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"opar: lifetime-aware route selection simulator for UAV ad hoc networks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed_override = 0;
    bool seed_given = false;

    auto* run = app.add_subcommand("run", "Run one scenario and emit a CSV report");
    run->add_option("--config", config_path, "Scenario config (JSON)")->required();
    auto* seed_opt = run->add_option("--seed", seed_override, "Override the config seed");
    run->add_option("--out", out_path, "Output file (default: stdout)");

    std::string sweep_param;
    std::string sweep_values;
    int sweep_seeds = 1;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a value list");
    sweep->add_option("--config", config_path, "Base scenario config (JSON)")->required();
    sweep->add_option("--param", sweep_param, "w1 | n_flows | n_uavs | mobility_model")
        ->required();
    sweep->add_option("--values", sweep_values, "Comma-separated value list")->required();
    sweep->add_option("--seeds", sweep_seeds, "Seeds per value (default 1)");
    sweep->add_option("--out", out_path, "Output file (default: stdout)");

    int oracle_nodes = 8;
    int oracle_trials = 200;
    std::uint64_t oracle_seed = 1;
    auto* oracle = app.add_subcommand(
        "oracle-check", "Compare the solver against exhaustive path enumeration");
    oracle->add_option("--nodes", oracle_nodes, "Graph size (<= 12)")
        ->check(CLI::Range(2, 12));
    oracle->add_option("--trials", oracle_trials, "Number of random graphs")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", oracle_seed, "Random seed");

    double traj_duration = -1.0;
    auto* traj = app.add_subcommand("trajectory", "Dump node trajectories as CSV");
    traj->add_option("--config", config_path, "Scenario config (JSON)")->required();
    traj->add_option("--duration", traj_duration, "Seconds to simulate (default: sim_time)");
    traj->add_option("--out", out_path, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;

    try {
        if (run->parsed()) {
            opar::ScenarioConfig cfg = opar::parse_config_file(config_path);
            if (seed_given) {
                cfg.seed = seed_override;
                cfg.mobility.seed = seed_override;
            }
            const opar::MetricsReport report = opar::run_scenario(cfg);
            write_output(opar::scenario_csv(cfg, report), out_path);
        } else if (sweep->parsed()) {
            const opar::ScenarioConfig base = opar::parse_config_file(config_path);
            opar::SweepSpec spec;
            spec.parameter = opar::parse_sweep_parameter(sweep_param);
            spec.values = split_csv_list(sweep_values);
            spec.seeds_per_point = sweep_seeds;
            write_output(opar::run_sweep(base, spec), out_path);
        } else if (oracle->parsed()) {
            return run_oracle_check(oracle_nodes, oracle_trials, oracle_seed);
        } else if (traj->parsed()) {
            const opar::ScenarioConfig cfg = opar::parse_config_file(config_path);
            const double duration = traj_duration > 0.0 ? traj_duration : cfg.sim_time;
            write_output(dump_trajectory(cfg, duration), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
