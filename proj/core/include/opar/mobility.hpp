#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "opar/geometry.hpp"
#include "opar/rng.hpp"

namespace opar {

enum class MobilityModel { RandomWaypoint, GaussMarkov };

struct MobilityConfig {
    MobilityModel model = MobilityModel::RandomWaypoint;
    double speed_min = 0.0;         // m/s
    double speed_max = 50.0;        // m/s
    double gm_memory = 0.85;        // autoregressive coefficient, [0, 1]
    double gm_angle_jitter = 0.05;  // hard per-step bound on angle change, rad
    double pause_time = 0.0;        // s, at each waypoint
    double step_dt = 0.1;           // s, integration step
    std::uint64_t seed = 1;

    friend bool operator==(const MobilityConfig&, const MobilityConfig&) = default;
};

/// Random-waypoint walker: straight legs toward uniformly drawn waypoints at
/// a uniformly drawn speed, with an optional pause on arrival.
struct RwpState {
    Position3D pos;
    Position3D waypoint;
    double speed = 0.0;
    double pause_left = 0.0;
};

RwpState rwp_init(const MobilityConfig& cfg, const Volume& volume, RandomStream& rng);
RwpState rwp_advance(RwpState state, const MobilityConfig& cfg, const Volume& volume,
                     double dt, RandomStream& rng);

/// Gauss-Markov walker: speed, azimuth and pitch each follow a first-order
/// autoregressive update around their means; the per-step angle change is
/// hard-bounded by gm_angle_jitter and walls reflect the direction.
struct GaussMarkovState {
    Position3D pos;
    double speed = 0.0;
    double azimuth = 0.0;       // (-pi, pi]
    double pitch = 0.0;         // [-pi/2, pi/2], 0 = level flight
    double mean_azimuth = 0.0;  // per-node preferred direction
};

GaussMarkovState gm_init(const MobilityConfig& cfg, const Volume& volume, RandomStream& rng);
GaussMarkovState gm_advance(GaussMarkovState state, const MobilityConfig& cfg,
                            const Volume& volume, double dt, RandomStream& rng);

/// Trajectories for a group of nodes. Each node owns an independent random
/// stream derived from (seed, node id), so trajectories are reproducible and
/// insensitive to how other nodes are configured.
class TrajectoryGenerator {
public:
    TrajectoryGenerator(int node_count, const MobilityConfig& cfg, const Volume& volume,
                        std::uint64_t seed);

    /// Uses cfg.seed for the node streams.
    TrajectoryGenerator(int node_count, const MobilityConfig& cfg, const Volume& volume);

    void advance(double dt);
    Position3D position(int node) const;
    int node_count() const { return static_cast<int>(states_.size()); }
    double time() const { return time_; }

private:
    MobilityConfig cfg_;
    Volume volume_;
    std::vector<std::variant<RwpState, GaussMarkovState>> states_;
    std::vector<RandomStream> streams_;
    double time_ = 0.0;
};

}  // namespace opar
