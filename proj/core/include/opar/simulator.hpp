#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opar/mobility.hpp"
#include "opar/optimizer.hpp"

namespace opar {

enum class RoutingAlgorithm { Opar, ShortestPathReroute };

/// Full description of one simulation run. `seed` drives every random draw
/// (node trajectories and flow endpoints), so (config, seed) determines the
/// outcome bit for bit.
struct ScenarioConfig {
    int n_uavs = 50;
    Volume volume{300.0, 2000.0, 50.0};
    MobilityConfig mobility;
    double range = 250.0;                  // transmission range R, meters
    int n_flows = 1;
    std::uint64_t file_size = 5'000'000;   // bytes per flow
    double sim_time = 500.0;               // seconds
    double report_interval = 0.9;          // ground-station snapshot cadence
    Weights weights{0.7, 0.3};
    RoutingAlgorithm algorithm = RoutingAlgorithm::Opar;
    double link_rate = 2.8e6;              // bits/s per link
    bool predictive_reroute = true;        // OPAR only; baseline ignores it
    double lifetime_horizon = 500.0;       // prediction cap, seconds
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct FlowRecord {
    int flow_id = 0;
    int source = 0;
    int destination = 0;
    std::uint64_t bytes_delivered = 0;
    double start_time = 0.0;   // admission at the first ground-station snapshot
    double finish_time = 0.0;  // sim_time for flows that never complete
    bool completed = false;
    int reroute_count = 0;

    friend bool operator==(const FlowRecord&, const FlowRecord&) = default;
};

struct MetricsReport {
    double success_rate = 0.0;
    double weighted_throughput_mbps = 0.0;  // mean per-flow Mbps x success_rate
    double mean_fct_s = 0.0;                // failed flows counted at sim_time
    std::uint64_t routing_overhead_bytes = 0;
    std::uint64_t position_report_bytes = 0;  // 52 bytes per node per snapshot
    std::uint64_t route_install_bytes = 0;    // 5 + 4*hops per installed route
    double mean_reroutes = 0.0;
    std::vector<FlowRecord> per_flow;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Runs the scenario: nodes move, report three recent positions to the
/// ground station every report_interval, the station rebuilds the lifetime
/// matrix and keeps one route per flow, and flows push bytes over their route
/// whenever every hop is physically within range. Deterministic given
/// (config, seed).
MetricsReport run_scenario(const ScenarioConfig& cfg);

/// Aggregates flow records into the report. Throws std::invalid_argument on
/// an empty flow list.
MetricsReport compute_metrics(const std::vector<FlowRecord>& flows, const ScenarioConfig& cfg,
                              std::uint64_t position_report_bytes,
                              std::uint64_t route_install_bytes);

/// Wire-format sizes used for overhead accounting.
/// Position report: 4-byte node id + 3 samples x (3 x 4-byte coordinates +
/// 4-byte timestamp). Route install: 4-byte flow id + 1-byte hop count +
/// 4 bytes per hop.
constexpr std::uint64_t kPositionReportBytes = 4 + 3 * (3 * 4 + 4);
constexpr std::uint64_t route_install_bytes_for(int hop_count) {
    return 4 + 1 + 4 * static_cast<std::uint64_t>(hop_count);
}

}  // namespace opar
