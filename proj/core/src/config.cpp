#include "opar/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace opar {

namespace {

using nlohmann::json;

void check_known_keys(const json& obj, const std::set<std::string>& known,
                      const std::string& scope) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown key '" + scope + key + "'");
        }
    }
}

template <typename T>
void read_field(const json& obj, const std::string& scope, const std::string& key, T& out) {
    if (!obj.contains(key)) {
        return;
    }
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("key '" + scope + key + "' has the wrong type");
    }
}

MobilityModel parse_model(const std::string& name) {
    if (name == "rwp" || name == "random_waypoint") {
        return MobilityModel::RandomWaypoint;
    }
    if (name == "gauss_markov" || name == "gm") {
        return MobilityModel::GaussMarkov;
    }
    throw ConfigError("key 'mobility.model' must be 'rwp' or 'gauss_markov', got '" +
                      name + "'");
}

RoutingAlgorithm parse_algorithm(const std::string& name) {
    if (name == "opar") {
        return RoutingAlgorithm::Opar;
    }
    if (name == "shortest_path_reroute") {
        return RoutingAlgorithm::ShortestPathReroute;
    }
    throw ConfigError("key 'algorithm' must be 'opar' or 'shortest_path_reroute', got '" +
                      name + "'");
}

}  // namespace

std::string to_string(MobilityModel model) {
    return model == MobilityModel::RandomWaypoint ? "rwp" : "gauss_markov";
}

std::string to_string(RoutingAlgorithm algorithm) {
    return algorithm == RoutingAlgorithm::Opar ? "opar" : "shortest_path_reroute";
}

ScenarioConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }

    check_known_keys(root,
                     {"n_uavs", "n_flows", "volume", "range", "file_size_bytes", "sim_time",
                      "report_interval", "link_rate_bps", "weights", "algorithm",
                      "predictive_reroute", "lifetime_horizon", "seed", "mobility"},
                     "");

    ScenarioConfig cfg;
    if (!root.contains("n_uavs")) {
        throw ConfigError("missing required key 'n_uavs'");
    }
    if (!root.contains("n_flows")) {
        throw ConfigError("missing required key 'n_flows'");
    }
    read_field(root, "", "n_uavs", cfg.n_uavs);
    read_field(root, "", "n_flows", cfg.n_flows);
    read_field(root, "", "range", cfg.range);
    read_field(root, "", "file_size_bytes", cfg.file_size);
    read_field(root, "", "sim_time", cfg.sim_time);
    read_field(root, "", "report_interval", cfg.report_interval);
    read_field(root, "", "link_rate_bps", cfg.link_rate);
    read_field(root, "", "predictive_reroute", cfg.predictive_reroute);
    read_field(root, "", "lifetime_horizon", cfg.lifetime_horizon);
    read_field(root, "", "seed", cfg.seed);

    if (root.contains("volume")) {
        const json& vol = root.at("volume");
        if (!vol.is_object()) {
            throw ConfigError("key 'volume' must be an object with x, y, z");
        }
        check_known_keys(vol, {"x", "y", "z"}, "volume.");
        read_field(vol, "volume.", "x", cfg.volume.x_max);
        read_field(vol, "volume.", "y", cfg.volume.y_max);
        read_field(vol, "volume.", "z", cfg.volume.z_max);
    }

    if (root.contains("weights")) {
        const json& w = root.at("weights");
        if (!w.is_object()) {
            throw ConfigError("key 'weights' must be an object with w1 (and optionally w2)");
        }
        check_known_keys(w, {"w1", "w2"}, "weights.");
        if (!w.contains("w1")) {
            throw ConfigError("key 'weights.w1' is required when 'weights' is given");
        }
        double w1 = 0.0;
        read_field(w, "weights.", "w1", w1);
        double w2 = 1.0 - w1;
        read_field(w, "weights.", "w2", w2);
        try {
            cfg.weights = Weights(w1, w2);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("key 'weights': ") + e.what());
        }
    }

    if (root.contains("algorithm")) {
        std::string name;
        read_field(root, "", "algorithm", name);
        cfg.algorithm = parse_algorithm(name);
    }

    if (root.contains("mobility")) {
        const json& mob = root.at("mobility");
        if (!mob.is_object()) {
            throw ConfigError("key 'mobility' must be an object");
        }
        check_known_keys(mob,
                         {"model", "speed_min", "speed_max", "gm_memory", "gm_angle_jitter",
                          "pause_time", "step_dt", "seed"},
                         "mobility.");
        if (mob.contains("model")) {
            std::string name;
            read_field(mob, "mobility.", "model", name);
            cfg.mobility.model = parse_model(name);
        }
        read_field(mob, "mobility.", "speed_min", cfg.mobility.speed_min);
        read_field(mob, "mobility.", "speed_max", cfg.mobility.speed_max);
        read_field(mob, "mobility.", "gm_memory", cfg.mobility.gm_memory);
        read_field(mob, "mobility.", "gm_angle_jitter", cfg.mobility.gm_angle_jitter);
        read_field(mob, "mobility.", "pause_time", cfg.mobility.pause_time);
        read_field(mob, "mobility.", "step_dt", cfg.mobility.step_dt);
        cfg.mobility.seed = cfg.seed;  // one seed drives the whole run
        read_field(mob, "mobility.", "seed", cfg.mobility.seed);
    } else {
        cfg.mobility.seed = cfg.seed;
    }

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string config_to_json(const ScenarioConfig& cfg) {
    json root;
    root["n_uavs"] = cfg.n_uavs;
    root["n_flows"] = cfg.n_flows;
    root["volume"] = {{"x", cfg.volume.x_max}, {"y", cfg.volume.y_max}, {"z", cfg.volume.z_max}};
    root["range"] = cfg.range;
    root["file_size_bytes"] = cfg.file_size;
    root["sim_time"] = cfg.sim_time;
    root["report_interval"] = cfg.report_interval;
    root["link_rate_bps"] = cfg.link_rate;
    root["weights"] = {{"w1", cfg.weights.w1}, {"w2", cfg.weights.w2}};
    root["algorithm"] = to_string(cfg.algorithm);
    root["predictive_reroute"] = cfg.predictive_reroute;
    root["lifetime_horizon"] = cfg.lifetime_horizon;
    root["seed"] = cfg.seed;
    root["mobility"] = {{"model", to_string(cfg.mobility.model)},
                        {"speed_min", cfg.mobility.speed_min},
                        {"speed_max", cfg.mobility.speed_max},
                        {"gm_memory", cfg.mobility.gm_memory},
                        {"gm_angle_jitter", cfg.mobility.gm_angle_jitter},
                        {"pause_time", cfg.mobility.pause_time},
                        {"step_dt", cfg.mobility.step_dt},
                        {"seed", cfg.mobility.seed}};
    return root.dump(2) + "\n";
}

}  // namespace opar
