#include "opar/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace opar {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

struct ActiveFlow {
    FlowRecord rec;
    std::optional<RoutePath> path;
    double rate_bps = 0.0;        // share for the current snapshot interval
    double delivered = 0.0;       // bytes, fractional while in flight
    bool admitted = false;
};

// Draws n distinct (source, destination) ordered pairs, source != destination.
std::vector<std::pair<int, int>> draw_flow_endpoints(int n_flows, int n_uavs,
                                                     RandomStream& rng) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n_flows);
    while (static_cast<int>(pairs.size()) < n_flows) {
        const int s = rng.uniform_int(0, n_uavs - 1);
        const int d = rng.uniform_int(0, n_uavs - 1);
        if (s == d) {
            continue;
        }
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(s, d)) != pairs.end()) {
            continue;
        }
        pairs.emplace_back(s, d);
    }
    return pairs;
}

bool path_in_matrix(const RoutePath& path, const LifetimeMatrix& matrix) {
    for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) {
        if (matrix.at(path.nodes[k], path.nodes[k + 1]) <= 0.0) {
            return false;
        }
    }
    return true;
}

double path_bottleneck(const RoutePath& path, const LifetimeMatrix& matrix) {
    double bottleneck = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) {
        bottleneck = std::min(bottleneck, matrix.at(path.nodes[k], path.nodes[k + 1]));
    }
    return bottleneck;
}

bool path_physically_up(const RoutePath& path, const TrajectoryGenerator& traj,
                        double range) {
    const double r2 = range * range;
    for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) {
        if (squared_distance(traj.position(path.nodes[k]),
                             traj.position(path.nodes[k + 1])) > r2) {
            return false;
        }
    }
    return true;
}

}  // namespace

void ScenarioConfig::validate() const {
    require(n_uavs >= 2, "n_uavs: must be at least 2");
    require(n_flows >= 1, "n_flows: must be at least 1");
    require(n_flows <= n_uavs * (n_uavs - 1),
            "n_flows: more flows than distinct (source, destination) pairs");
    require(sim_time > 0.0, "sim_time: must be positive");
    require(link_rate > 0.0, "link_rate: must be positive");
    require(range > 0.0, "range: must be positive");
    require(report_interval > 0.0, "report_interval: must be positive");
    require(lifetime_horizon > 0.0, "lifetime_horizon: must be positive");
    require(file_size > 0, "file_size: must be positive");
    require(volume.x_max > 0.0 && volume.y_max > 0.0 && volume.z_max > 0.0,
            "volume: all extents must be positive");
    require(mobility.speed_min >= 0.0, "mobility.speed_min: must be non-negative");
    require(mobility.speed_max >= mobility.speed_min,
            "mobility.speed_max: must be >= speed_min");
    require(mobility.gm_memory >= 0.0 && mobility.gm_memory <= 1.0,
            "mobility.gm_memory: must be in [0, 1]");
    require(mobility.gm_angle_jitter >= 0.0, "mobility.gm_angle_jitter: must be non-negative");
    require(mobility.pause_time >= 0.0, "mobility.pause_time: must be non-negative");
    require(mobility.step_dt > 0.0, "mobility.step_dt: must be positive");
    // Weights invariants are enforced by the Weights constructor.
}

MetricsReport run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();

    const int n = cfg.n_uavs;
    TrajectoryGenerator traj(n, cfg.mobility, cfg.volume, cfg.seed);

    // Flow endpoints come from a stream separate from every node stream.
    RandomStream flow_rng(cfg.seed, 0xf10af10aULL);
    const auto endpoints = draw_flow_endpoints(cfg.n_flows, n, flow_rng);

    std::vector<ActiveFlow> flows(cfg.n_flows);
    for (int i = 0; i < cfg.n_flows; ++i) {
        flows[i].rec.flow_id = i;
        flows[i].rec.source = endpoints[i].first;
        flows[i].rec.destination = endpoints[i].second;
        flows[i].rec.start_time = cfg.sim_time;   // overwritten on admission
        flows[i].rec.finish_time = cfg.sim_time;  // overwritten on completion
    }

    std::uint64_t position_bytes = 0;
    std::uint64_t install_bytes = 0;

    // Nodes record a position every report_interval / 3 seconds and the
    // ground station acts on every third sample, so each snapshot sees three
    // fresh samples per node.
    const double sample_interval = cfg.report_interval / 3.0;
    const long total_samples =
        static_cast<long>(std::floor(cfg.sim_time / sample_interval + 1e-9));

    std::vector<std::deque<PositionSample>> history(n);
    for (int i = 0; i < n; ++i) {
        history[i].push_back({traj.position(i), 0.0});
    }

    const auto solve_route = [&](const NetGraph& graph, const LifetimeMatrix& matrix,
                                 const ActiveFlow& flow) {
        if (cfg.algorithm == RoutingAlgorithm::Opar) {
            return opar_solve(graph, matrix, flow.rec.source, flow.rec.destination,
                              cfg.weights);
        }
        return bfs_shortest_path(graph, flow.rec.source, flow.rec.destination);
    };

    const auto install = [&](ActiveFlow& flow, RoutePath path) {
        if (!flow.path || flow.path->nodes != path.nodes) {
            install_bytes += route_install_bytes_for(path.hop_count);
        }
        flow.path = std::move(path);
    };

    double now = 0.0;
    for (long sample = 1; sample <= total_samples; ++sample) {
        const double sample_time = static_cast<double>(sample) * sample_interval;

        // Advance mobility to the sample time in step_dt sub-steps, moving
        // bytes over each sub-step on every flow whose whole route is
        // physically within range.
        double t = now;
        while (t < sample_time - 1e-12) {
            const double dt = std::min(cfg.mobility.step_dt, sample_time - t);
            traj.advance(dt);
            for (ActiveFlow& flow : flows) {
                if (flow.rec.completed || !flow.path || flow.rate_bps <= 0.0) {
                    continue;
                }
                if (!path_physically_up(*flow.path, traj, cfg.range)) {
                    continue;  // broken mid-interval: bytes stop, route kept for accounting
                }
                const double remaining_bytes =
                    static_cast<double>(cfg.file_size) - flow.delivered;
                const double needed = remaining_bytes * 8.0 / flow.rate_bps;
                if (needed <= dt) {
                    flow.delivered = static_cast<double>(cfg.file_size);
                    flow.rec.completed = true;
                    flow.rec.finish_time = t + needed;
                } else {
                    flow.delivered += flow.rate_bps * dt / 8.0;
                }
            }
            t += dt;
        }
        now = sample_time;

        for (int i = 0; i < n; ++i) {
            history[i].push_back({traj.position(i), now});
            if (history[i].size() > 3) {
                history[i].pop_front();
            }
        }

        if (sample % 3 != 0) {
            continue;
        }

        // Ground-station snapshot: collect reports, rebuild the matrix,
        // refresh routes.
        position_bytes += static_cast<std::uint64_t>(n) * kPositionReportBytes;

        std::vector<KinematicState> states;
        states.reserve(n);
        for (int i = 0; i < n; ++i) {
            states.push_back(KinematicState::from_samples(history[i][0], history[i][1],
                                                          history[i][2]));
        }
        const LifetimeMatrix matrix =
            build_matrix(states, cfg.range, cfg.lifetime_horizon);
        const NetGraph graph = to_graph(matrix);

        for (ActiveFlow& flow : flows) {
            if (flow.rec.completed) {
                continue;
            }
            if (!flow.admitted) {
                flow.admitted = true;
                flow.rec.start_time = now;
            }
            if (!flow.path) {
                // Initial acquisition, or retry after a stall; neither counts
                // as a reroute.
                if (auto path = solve_route(graph, matrix, flow)) {
                    install(flow, std::move(*path));
                }
            } else {
                const bool broken = !path_in_matrix(*flow.path, matrix);
                const bool expiring = cfg.algorithm == RoutingAlgorithm::Opar &&
                                      cfg.predictive_reroute &&
                                      path_bottleneck(*flow.path, matrix) < cfg.report_interval;
                if (broken || expiring) {
                    ++flow.rec.reroute_count;
                    if (auto path = solve_route(graph, matrix, flow)) {
                        install(flow, std::move(*path));
                    } else {
                        flow.path.reset();  // stalled until a path reappears
                    }
                }
            }
        }

        // Split link capacity equally among the flows sharing each link; a
        // flow's rate is set by its most contended link and holds until the
        // next snapshot.
        std::vector<int> usage(static_cast<std::size_t>(n) * n, 0);
        for (const ActiveFlow& flow : flows) {
            if (flow.rec.completed || !flow.path) {
                continue;
            }
            for (std::size_t k = 0; k + 1 < flow.path->nodes.size(); ++k) {
                ++usage[static_cast<std::size_t>(flow.path->nodes[k]) * n +
                        flow.path->nodes[k + 1]];
            }
        }
        for (ActiveFlow& flow : flows) {
            flow.rate_bps = 0.0;
            if (flow.rec.completed || !flow.path) {
                continue;
            }
            int max_usage = 1;
            for (std::size_t k = 0; k + 1 < flow.path->nodes.size(); ++k) {
                max_usage = std::max(
                    max_usage, usage[static_cast<std::size_t>(flow.path->nodes[k]) * n +
                                     flow.path->nodes[k + 1]]);
            }
            flow.rate_bps = cfg.link_rate / static_cast<double>(max_usage);
        }
    }

    std::vector<FlowRecord> records;
    records.reserve(flows.size());
    for (ActiveFlow& flow : flows) {
        flow.rec.bytes_delivered = static_cast<std::uint64_t>(
            std::min(flow.delivered, static_cast<double>(cfg.file_size)));
        records.push_back(flow.rec);
    }
    return compute_metrics(records, cfg, position_bytes, install_bytes);
}

MetricsReport compute_metrics(const std::vector<FlowRecord>& flows, const ScenarioConfig& cfg,
                              std::uint64_t position_report_bytes,
                              std::uint64_t route_install_bytes) {
    if (flows.empty()) {
        throw std::invalid_argument("compute_metrics: empty flow list");
    }

    MetricsReport report;
    report.per_flow = flows;
    report.position_report_bytes = position_report_bytes;
    report.route_install_bytes = route_install_bytes;
    report.routing_overhead_bytes = position_report_bytes + route_install_bytes;

    int completed = 0;
    double throughput_sum = 0.0;
    double fct_sum = 0.0;
    double reroute_sum = 0.0;
    for (const FlowRecord& flow : flows) {
        if (flow.completed) {
            ++completed;
            fct_sum += flow.finish_time - flow.start_time;
        } else {
            // Failed flows are lower-bounded at the simulation horizon.
            fct_sum += cfg.sim_time;
        }
        const double end = flow.completed ? flow.finish_time : cfg.sim_time;
        const double duration = end - flow.start_time;
        if (duration > 0.0) {
            throughput_sum +=
                static_cast<double>(flow.bytes_delivered) * 8.0 / duration / 1e6;
        }
        reroute_sum += static_cast<double>(flow.reroute_count);
    }

    const double total = static_cast<double>(flows.size());
    report.success_rate = static_cast<double>(completed) / total;
    report.weighted_throughput_mbps = (throughput_sum / total) * report.success_rate;
    report.mean_fct_s = fct_sum / total;
    report.mean_reroutes = reroute_sum / total;
    return report;
}

}  // namespace opar
