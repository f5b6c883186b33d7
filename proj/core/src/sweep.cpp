#include "opar/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "opar/config.hpp"

namespace opar {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void append_config_header(std::ostringstream& out, const ScenarioConfig& cfg) {
    out << "# n_uavs = " << cfg.n_uavs << "\n";
    out << "# n_flows = " << cfg.n_flows << "\n";
    out << "# volume = " << fixed6(cfg.volume.x_max) << " x " << fixed6(cfg.volume.y_max)
        << " x " << fixed6(cfg.volume.z_max) << " m\n";
    out << "# range = " << fixed6(cfg.range) << " m\n";
    out << "# file_size_bytes = " << cfg.file_size << "\n";
    out << "# sim_time = " << fixed6(cfg.sim_time) << " s\n";
    out << "# report_interval = " << fixed6(cfg.report_interval) << " s\n";
    out << "# link_rate_bps = " << fixed6(cfg.link_rate) << "\n";
    out << "# weights = w1 " << fixed6(cfg.weights.w1) << ", w2 " << fixed6(cfg.weights.w2)
        << "\n";
    out << "# algorithm = " << to_string(cfg.algorithm) << "\n";
    out << "# predictive_reroute = " << (cfg.predictive_reroute ? "true" : "false") << "\n";
    out << "# lifetime_horizon = " << fixed6(cfg.lifetime_horizon) << " s\n";
    out << "# seed = " << cfg.seed << "\n";
    out << "# mobility.model = " << to_string(cfg.mobility.model) << "\n";
    out << "# mobility.speed = [" << fixed6(cfg.mobility.speed_min) << ", "
        << fixed6(cfg.mobility.speed_max) << "] m/s\n";
    out << "# mobility.gm_memory = " << fixed6(cfg.mobility.gm_memory) << "\n";
    out << "# mobility.gm_angle_jitter = " << fixed6(cfg.mobility.gm_angle_jitter) << " rad\n";
    out << "# mobility.pause_time = " << fixed6(cfg.mobility.pause_time) << " s\n";
    out << "# mobility.step_dt = " << fixed6(cfg.mobility.step_dt) << " s\n";
    out << "# weighted_throughput_mbps = mean(per-flow Mbps) * success_rate\n";
    out << "# mean_fct_s: failed flows counted at sim_time\n";
    out << "# overhead_bytes = position reports (52 B/node/snapshot) + route installs"
           " (5 B + 4 B/hop)\n";
}

}  // namespace

SweepSpec::Parameter parse_sweep_parameter(const std::string& name) {
    if (name == "w1") {
        return SweepSpec::Parameter::W1;
    }
    if (name == "n_flows") {
        return SweepSpec::Parameter::NFlows;
    }
    if (name == "n_uavs") {
        return SweepSpec::Parameter::NUavs;
    }
    if (name == "mobility_model") {
        return SweepSpec::Parameter::MobilityModel;
    }
    throw std::invalid_argument(
        "sweep parameter must be one of w1, n_flows, n_uavs, mobility_model; got '" + name +
        "'");
}

std::string to_string(SweepSpec::Parameter parameter) {
    switch (parameter) {
        case SweepSpec::Parameter::W1: return "w1";
        case SweepSpec::Parameter::NFlows: return "n_flows";
        case SweepSpec::Parameter::NUavs: return "n_uavs";
        case SweepSpec::Parameter::MobilityModel: return "mobility_model";
    }
    return "?";
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepSpec::Parameter parameter,
                                 const std::string& value) {
    ScenarioConfig cfg = base;
    switch (parameter) {
        case SweepSpec::Parameter::W1: {
            const double w1 = std::stod(value);
            cfg.weights = Weights(w1, 1.0 - w1);
            break;
        }
        case SweepSpec::Parameter::NFlows:
            cfg.n_flows = std::stoi(value);
            break;
        case SweepSpec::Parameter::NUavs:
            cfg.n_uavs = std::stoi(value);
            break;
        case SweepSpec::Parameter::MobilityModel:
            if (value == "rwp" || value == "random_waypoint") {
                cfg.mobility.model = MobilityModel::RandomWaypoint;
            } else if (value == "gauss_markov" || value == "gm") {
                cfg.mobility.model = MobilityModel::GaussMarkov;
            } else {
                throw std::invalid_argument("mobility_model value must be 'rwp' or"
                                            " 'gauss_markov', got '" + value + "'");
            }
            break;
    }
    cfg.validate();
    return cfg;
}

std::string scenario_csv(const ScenarioConfig& cfg, const MetricsReport& report) {
    std::ostringstream out;
    out << "# opar scenario report\n";
    append_config_header(out, cfg);
    out << "metric,value\n";
    out << "success_rate," << fixed6(report.success_rate) << "\n";
    out << "weighted_throughput_mbps," << fixed6(report.weighted_throughput_mbps) << "\n";
    out << "mean_fct_s," << fixed6(report.mean_fct_s) << "\n";
    out << "overhead_bytes," << report.routing_overhead_bytes << "\n";
    out << "position_report_bytes," << report.position_report_bytes << "\n";
    out << "route_install_bytes," << report.route_install_bytes << "\n";
    out << "mean_reroutes," << fixed6(report.mean_reroutes) << "\n";
    out << "# per-flow records\n";
    out << "flow_id,source,destination,bytes_delivered,start_time,finish_time,completed,"
           "reroutes\n";
    for (const FlowRecord& flow : report.per_flow) {
        out << flow.flow_id << "," << flow.source << "," << flow.destination << ","
            << flow.bytes_delivered << "," << fixed6(flow.start_time) << ","
            << fixed6(flow.finish_time) << "," << (flow.completed ? 1 : 0) << ","
            << flow.reroute_count << "\n";
    }
    return out.str();
}

std::string run_sweep(const ScenarioConfig& base, const SweepSpec& spec) {
    if (spec.values.empty()) {
        throw std::invalid_argument("sweep: values must be non-empty");
    }
    if (spec.seeds_per_point < 1) {
        throw std::invalid_argument("sweep: seeds_per_point must be >= 1");
    }

    struct Point {
        std::string value;
        std::uint64_t seed;
        MetricsReport report;
    };

    // Validate every point before spending any simulation time, so a bad
    // value aborts with the failing point identified.
    std::vector<Point> points;
    for (const std::string& value : spec.values) {
        try {
            (void)apply_sweep_value(base, spec.parameter, value);
        } catch (const std::exception& e) {
            throw std::invalid_argument("sweep point '" + value + "': " + e.what());
        }
        for (int k = 0; k < spec.seeds_per_point; ++k) {
            points.push_back({value, base.seed + static_cast<std::uint64_t>(k), {}});
        }
    }

    // Run the points on a bounded pool; results land by index, so the output
    // order is fixed no matter how the runs interleave.
    const unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()),
        static_cast<unsigned>(points.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < points.size();
                     i = next.fetch_add(1)) {
                    ScenarioConfig cfg =
                        apply_sweep_value(base, spec.parameter, points[i].value);
                    cfg.seed = points[i].seed;
                    cfg.mobility.seed = points[i].seed;
                    points[i].report = run_scenario(cfg);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::ostringstream out;
    out << "# opar sweep report\n";
    out << "# swept parameter = " << to_string(spec.parameter) << "\n";
    out << "# seeds per point = " << spec.seeds_per_point << " (base seed " << base.seed
        << ")\n";
    append_config_header(out, base);
    out << "parameter,seed,success_rate,weighted_throughput_mbps,mean_fct_s,overhead_bytes,"
           "mean_reroutes\n";

    std::size_t index = 0;
    for (const std::string& value : spec.values) {
        double sum_success = 0.0;
        double sum_throughput = 0.0;
        double sum_fct = 0.0;
        double sum_overhead = 0.0;
        double sum_reroutes = 0.0;
        for (int k = 0; k < spec.seeds_per_point; ++k, ++index) {
            const Point& point = points[index];
            out << value << "," << point.seed << "," << fixed6(point.report.success_rate)
                << "," << fixed6(point.report.weighted_throughput_mbps) << ","
                << fixed6(point.report.mean_fct_s) << ","
                << point.report.routing_overhead_bytes << ","
                << fixed6(point.report.mean_reroutes) << "\n";
            sum_success += point.report.success_rate;
            sum_throughput += point.report.weighted_throughput_mbps;
            sum_fct += point.report.mean_fct_s;
            sum_overhead += static_cast<double>(point.report.routing_overhead_bytes);
            sum_reroutes += point.report.mean_reroutes;
        }
        const double k = static_cast<double>(spec.seeds_per_point);
        out << value << ",mean," << fixed6(sum_success / k) << ","
            << fixed6(sum_throughput / k) << "," << fixed6(sum_fct / k) << ","
            << fixed6(sum_overhead / k) << "," << fixed6(sum_reroutes / k) << "\n";
    }
    return out.str();
}

}  // namespace opar
