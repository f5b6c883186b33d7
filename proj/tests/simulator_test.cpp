#include <stdexcept>

#include <doctest.h>

#include "opar/simulator.hpp"
#include "opar/sweep.hpp"

using namespace opar;

namespace {

// Two hovering nodes a few meters apart: the link is up for the whole run.
ScenarioConfig two_node_static_config() {
    ScenarioConfig cfg;
    cfg.n_uavs = 2;
    cfg.volume = {10.0, 10.0, 10.0};
    cfg.mobility.model = MobilityModel::RandomWaypoint;
    cfg.mobility.speed_min = 0.0;
    cfg.mobility.speed_max = 0.0;  // drawn speed 0: nodes hold position
    cfg.range = 250.0;
    cfg.n_flows = 1;
    cfg.file_size = 1'000'000;  // 1 MB
    cfg.sim_time = 60.0;
    cfg.link_rate = 1e6;  // 1 Mbps
    cfg.weights = Weights(0.7, 0.3);
    cfg.seed = 11;
    return cfg;
}

ScenarioConfig small_dynamic_config() {
    ScenarioConfig cfg;
    cfg.n_uavs = 12;
    cfg.volume = {300.0, 600.0, 50.0};
    cfg.range = 250.0;
    cfg.n_flows = 3;
    cfg.file_size = 2'000'000;
    cfg.sim_time = 120.0;
    cfg.link_rate = 2.8e6;
    cfg.weights = Weights(0.7, 0.3);
    cfg.lifetime_horizon = 120.0;
    cfg.seed = 5;
    return cfg;
}

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("single static flow completes with FCT file_size * 8 / rate") {
    const ScenarioConfig cfg = two_node_static_config();
    const MetricsReport report = run_scenario(cfg);

    REQUIRE(report.per_flow.size() == 1);
    const FlowRecord& flow = report.per_flow[0];
    CHECK(flow.completed);
    CHECK(flow.bytes_delivered == cfg.file_size);
    // 8 Mbit at 1 Mbps, admitted at the first ground-station snapshot.
    CHECK(flow.start_time == doctest::Approx(cfg.report_interval));
    CHECK(flow.finish_time - flow.start_time == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(flow.reroute_count == 0);
    CHECK(report.success_rate == 1.0);
    CHECK(report.mean_fct_s == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("unreachable destination fails with FCT pinned to sim_time") {
    ScenarioConfig cfg = two_node_static_config();
    cfg.volume = {10000.0, 10000.0, 10.0};
    cfg.range = 1.0;  // nodes are essentially never within a meter
    cfg.sim_time = 30.0;
    const MetricsReport report = run_scenario(cfg);

    REQUIRE(report.per_flow.size() == 1);
    CHECK_FALSE(report.per_flow[0].completed);
    CHECK(report.per_flow[0].bytes_delivered == 0);
    CHECK(report.success_rate == 0.0);
    CHECK(report.mean_fct_s == doctest::Approx(cfg.sim_time));
    CHECK(report.weighted_throughput_mbps == 0.0);
    CHECK(report.route_install_bytes == 0);
}

TEST_CASE("same config and seed reproduce the report bit for bit") {
    const ScenarioConfig cfg = small_dynamic_config();
    const MetricsReport a = run_scenario(cfg);
    const MetricsReport b = run_scenario(cfg);
    CHECK(a == b);
    CHECK(scenario_csv(cfg, a) == scenario_csv(cfg, b));
}

TEST_CASE("flow records respect conservation and time bounds") {
    for (const auto model : {MobilityModel::RandomWaypoint, MobilityModel::GaussMarkov}) {
        ScenarioConfig cfg = small_dynamic_config();
        cfg.mobility.model = model;
        const MetricsReport report = run_scenario(cfg);
        REQUIRE(report.per_flow.size() == 3);
        for (const FlowRecord& flow : report.per_flow) {
            CHECK(flow.bytes_delivered <= cfg.file_size);
            CHECK(flow.source != flow.destination);
            if (flow.completed) {
                CHECK(flow.bytes_delivered == cfg.file_size);
                CHECK(flow.finish_time <= cfg.sim_time);
                CHECK(flow.finish_time > flow.start_time);
            }
            CHECK(flow.reroute_count >= 0);
        }
        CHECK(report.mean_fct_s <= cfg.sim_time);
        CHECK(report.success_rate >= 0.0);
        CHECK(report.success_rate <= 1.0);
        CHECK(report.routing_overhead_bytes ==
              report.position_report_bytes + report.route_install_bytes);
    }
}

TEST_CASE("baseline equals opar with w = (1, 0) and prediction off") {
    ScenarioConfig baseline = small_dynamic_config();
    baseline.algorithm = RoutingAlgorithm::ShortestPathReroute;

    ScenarioConfig degenerate = small_dynamic_config();
    degenerate.algorithm = RoutingAlgorithm::Opar;
    degenerate.weights = Weights(1.0, 0.0);
    degenerate.predictive_reroute = false;

    const MetricsReport a = run_scenario(baseline);
    const MetricsReport b = run_scenario(degenerate);
    // Same mobility, same triggers, and the degenerate objective reduces to
    // hop count, so the chosen routes coincide snapshot by snapshot.
    CHECK(a.per_flow == b.per_flow);
}

TEST_CASE("position report accounting matches the closed form") {
    ScenarioConfig cfg = small_dynamic_config();
    cfg.sim_time = 45.0;
    const MetricsReport report = run_scenario(cfg);
    const auto snapshots = static_cast<std::uint64_t>(cfg.sim_time / cfg.report_interval);
    CHECK(report.position_report_bytes ==
          snapshots * static_cast<std::uint64_t>(cfg.n_uavs) * kPositionReportBytes);
}

TEST_CASE("invalid configs are rejected before any work") {
    ScenarioConfig cfg = small_dynamic_config();
    cfg.n_uavs = 1;
    CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

    cfg = small_dynamic_config();
    cfg.sim_time = 0.0;
    CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);

    cfg = small_dynamic_config();
    cfg.link_rate = -1.0;
    CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
}

TEST_CASE("compute_metrics arithmetic") {
    ScenarioConfig cfg = small_dynamic_config();
    cfg.sim_time = 500.0;
    cfg.file_size = 5'000'000;

    std::vector<FlowRecord> flows(10);
    for (int i = 0; i < 10; ++i) {
        flows[i].flow_id = i;
        flows[i].source = 0;
        flows[i].destination = 1;
        flows[i].start_time = 0.0;
        if (i < 5) {
            flows[i].completed = true;
            flows[i].bytes_delivered = cfg.file_size;
            flows[i].finish_time = 20.0;  // 40 Mbit in 20 s = 2 Mbps
        } else {
            flows[i].completed = false;
            flows[i].bytes_delivered = 0;
            flows[i].finish_time = cfg.sim_time;
        }
    }
    const MetricsReport report = compute_metrics(flows, cfg, 1000, 24);
    CHECK(report.success_rate == doctest::Approx(0.5));
    // Five flows at 2 Mbps, five at 0, weighted by the 0.5 success rate.
    CHECK(report.weighted_throughput_mbps == doctest::Approx(0.5));
    CHECK(report.mean_fct_s == doctest::Approx(0.5 * 20.0 + 0.5 * 500.0));
    CHECK(report.routing_overhead_bytes == 1024);

    CHECK_THROWS_AS(compute_metrics({}, cfg, 0, 0), std::invalid_argument);
}

TEST_CASE("single completed flow throughput matches its definition") {
    ScenarioConfig cfg = small_dynamic_config();
    cfg.sim_time = 500.0;
    std::vector<FlowRecord> flows(1);
    flows[0].completed = true;
    flows[0].bytes_delivered = 5'000'000;
    flows[0].start_time = 0.0;
    flows[0].finish_time = 20.0;
    const MetricsReport report = compute_metrics(flows, cfg, 0, 0);
    CHECK(report.weighted_throughput_mbps == doctest::Approx(2.0));
    CHECK(report.mean_fct_s == doctest::Approx(20.0));
}

}  // TEST_SUITE
