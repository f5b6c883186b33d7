#include "opar/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace opar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Fraction of the speed range used as the Gauss-Markov speed noise sigma.
constexpr double kGmSpeedNoiseFraction = 1.0 / 6.0;

Position3D uniform_point(const Volume& volume, RandomStream& rng) {
    return {rng.uniform(0.0, volume.x_max),
            rng.uniform(0.0, volume.y_max),
            rng.uniform(0.0, volume.z_max)};
}

double wrap_azimuth(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

// Reflect a coordinate into [0, max], flipping the matching velocity
// component for every bounce.
void reflect_axis(double& coord, double& vel, double max) {
    while (coord < 0.0 || coord > max) {
        if (coord < 0.0) {
            coord = -coord;
            vel = -vel;
        } else {
            coord = 2.0 * max - coord;
            vel = -vel;
        }
    }
}

}  // namespace

RwpState rwp_init(const MobilityConfig& cfg, const Volume& volume, RandomStream& rng) {
    RwpState st;
    st.pos = uniform_point(volume, rng);
    st.waypoint = uniform_point(volume, rng);
    st.speed = rng.uniform(cfg.speed_min, cfg.speed_max);
    st.pause_left = 0.0;
    return st;
}

RwpState rwp_advance(RwpState state, const MobilityConfig& cfg, const Volume& volume,
                     double dt, RandomStream& rng) {
    double remaining = dt;
    while (remaining > 0.0) {
        if (state.pause_left > 0.0) {
            const double pause = std::min(state.pause_left, remaining);
            state.pause_left -= pause;
            remaining -= pause;
            if (state.pause_left > 0.0) {
                return state;
            }
            // Pause over: pick the next leg.
            state.waypoint = uniform_point(volume, rng);
            state.speed = rng.uniform(cfg.speed_min, cfg.speed_max);
            continue;
        }

        const double dist = distance(state.pos, state.waypoint);
        if (dist == 0.0) {
            // At the waypoint. Pause if configured, otherwise draw a new leg.
            if (cfg.pause_time > 0.0) {
                state.pause_left = cfg.pause_time;
            } else {
                state.waypoint = uniform_point(volume, rng);
                state.speed = rng.uniform(cfg.speed_min, cfg.speed_max);
            }
            continue;
        }
        if (state.speed <= 0.0) {
            return state;  // drawn speed 0: the node holds position
        }

        const double time_to_arrive = dist / state.speed;
        if (time_to_arrive <= remaining) {
            state.pos = state.waypoint;
            remaining -= time_to_arrive;
            state.pause_left = cfg.pause_time;
            if (cfg.pause_time <= 0.0) {
                state.waypoint = uniform_point(volume, rng);
                state.speed = rng.uniform(cfg.speed_min, cfg.speed_max);
            }
        } else {
            const double frac = state.speed * remaining / dist;
            state.pos.x += (state.waypoint.x - state.pos.x) * frac;
            state.pos.y += (state.waypoint.y - state.pos.y) * frac;
            state.pos.z += (state.waypoint.z - state.pos.z) * frac;
            remaining = 0.0;
        }
    }
    return state;
}

GaussMarkovState gm_init(const MobilityConfig& cfg, const Volume& volume, RandomStream& rng) {
    GaussMarkovState st;
    st.pos = uniform_point(volume, rng);
    st.speed = rng.uniform(cfg.speed_min, cfg.speed_max);
    st.azimuth = rng.uniform(-kPi, kPi);
    st.pitch = 0.0;
    st.mean_azimuth = st.azimuth;
    return st;
}

GaussMarkovState gm_advance(GaussMarkovState state, const MobilityConfig& cfg,
                            const Volume& volume, double dt, RandomStream& rng) {
    const double alpha = cfg.gm_memory;
    const double noise_gain = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    const double mean_speed = 0.5 * (cfg.speed_min + cfg.speed_max);
    const double speed_sigma = kGmSpeedNoiseFraction * (cfg.speed_max - cfg.speed_min);
    const double angle_sigma = 0.5 * cfg.gm_angle_jitter;

    double speed = alpha * state.speed + (1.0 - alpha) * mean_speed +
                   noise_gain * speed_sigma * rng.gaussian();
    speed = std::clamp(speed, cfg.speed_min, cfg.speed_max);

    // Autoregressive angle updates; the total per-step change (drift plus
    // noise) is hard-bounded by gm_angle_jitter.
    const double raw_azimuth = alpha * state.azimuth + (1.0 - alpha) * state.mean_azimuth +
                               noise_gain * angle_sigma * rng.gaussian();
    const double az_delta = std::clamp(raw_azimuth - state.azimuth,
                                       -cfg.gm_angle_jitter, cfg.gm_angle_jitter);
    double azimuth = wrap_azimuth(state.azimuth + az_delta);

    const double raw_pitch = alpha * state.pitch +
                             noise_gain * angle_sigma * rng.gaussian();  // mean pitch 0
    const double pitch_delta = std::clamp(raw_pitch - state.pitch,
                                          -cfg.gm_angle_jitter, cfg.gm_angle_jitter);
    double pitch = std::clamp(state.pitch + pitch_delta, -kHalfPi, kHalfPi);

    double vx = speed * std::cos(pitch) * std::cos(azimuth);
    double vy = speed * std::cos(pitch) * std::sin(azimuth);
    double vz = speed * std::sin(pitch);

    Position3D pos = state.pos;
    pos.x += vx * dt;
    pos.y += vy * dt;
    pos.z += vz * dt;

    const double vx_in = vx;
    const double vy_in = vy;
    const double vz_in = vz;
    reflect_axis(pos.x, vx, volume.x_max);
    reflect_axis(pos.y, vy, volume.y_max);
    reflect_axis(pos.z, vz, volume.z_max);
    const bool flip_x = vx != vx_in;
    const bool flip_y = vy != vy_in;
    const bool flip_z = vz != vz_in;

    state.pos = pos;
    state.speed = speed;
    state.azimuth = azimuth;
    state.pitch = pitch;
    if (flip_x || flip_y || flip_z) {
        // Re-derive the heading from the reflected velocity and mirror the
        // preferred direction, so the mean does not drag the node back into
        // the wall it just bounced off.
        state.azimuth = wrap_azimuth(std::atan2(vy, vx));
        state.pitch = std::clamp(std::atan2(vz, std::hypot(vx, vy)), -kHalfPi, kHalfPi);
        if (flip_x) {
            state.mean_azimuth = wrap_azimuth(kPi - state.mean_azimuth);
        }
        if (flip_y) {
            state.mean_azimuth = wrap_azimuth(-state.mean_azimuth);
        }
    }
    return state;
}

TrajectoryGenerator::TrajectoryGenerator(int node_count, const MobilityConfig& cfg,
                                         const Volume& volume, std::uint64_t seed)
    : cfg_(cfg), volume_(volume) {
    states_.reserve(node_count);
    streams_.reserve(node_count);
    for (int i = 0; i < node_count; ++i) {
        streams_.emplace_back(seed, static_cast<std::uint64_t>(i));
        if (cfg.model == MobilityModel::RandomWaypoint) {
            states_.emplace_back(rwp_init(cfg_, volume_, streams_.back()));
        } else {
            states_.emplace_back(gm_init(cfg_, volume_, streams_.back()));
        }
    }
}

TrajectoryGenerator::TrajectoryGenerator(int node_count, const MobilityConfig& cfg,
                                         const Volume& volume)
    : TrajectoryGenerator(node_count, cfg, volume, cfg.seed) {}

void TrajectoryGenerator::advance(double dt) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (auto* rwp = std::get_if<RwpState>(&states_[i])) {
            *rwp = rwp_advance(*rwp, cfg_, volume_, dt, streams_[i]);
        } else {
            auto& gm = std::get<GaussMarkovState>(states_[i]);
            gm = gm_advance(gm, cfg_, volume_, dt, streams_[i]);
        }
    }
    time_ += dt;
}

Position3D TrajectoryGenerator::position(int node) const {
    if (const auto* rwp = std::get_if<RwpState>(&states_[node])) {
        return rwp->pos;
    }
    return std::get<GaussMarkovState>(states_[node]).pos;
}

}  // namespace opar
