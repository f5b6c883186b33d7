#include "opar/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opar {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

DirectionAngles direction_angles(const PositionSample& from, const PositionSample& to) {
    if (to.time <= from.time) {
        throw std::invalid_argument("direction_angles: sample times must be strictly increasing");
    }
    const double dx = to.position.x - from.position.x;
    const double dy = to.position.y - from.position.y;
    const double dz = to.position.z - from.position.z;
    const double norm = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (norm == 0.0) {
        return {0.0, 0.0, true};
    }
    double azimuth = std::atan2(dy, dx);
    if (azimuth <= -kPi) {
        azimuth = kPi;  // keep azimuth in (-pi, pi]
    }
    const double polar = std::acos(clamp_unit(dz / norm));
    return {azimuth, polar, false};
}

double speed(const PositionSample& from, const PositionSample& to) {
    if (to.time <= from.time) {
        throw std::invalid_argument("speed: sample times must be strictly increasing");
    }
    return distance(from.position, to.position) / (to.time - from.time);
}

double acceleration(double v1, double v2, double t0, double t2) {
    if (t2 <= t0) {
        throw std::invalid_argument("acceleration: t2 must be greater than t0");
    }
    return (v2 - v1) / (t2 - t0);
}

Position3D advance_position(const Position3D& p, double azimuth, double polar,
                            double spd, double acc, double dt) {
    const double s = spd * dt + 0.5 * acc * dt * dt;
    return {p.x + s * std::sin(polar) * std::cos(azimuth),
            p.y + s * std::sin(polar) * std::sin(azimuth),
            p.z + s * std::cos(polar)};
}

KinematicState KinematicState::from_samples(const PositionSample& s0,
                                            const PositionSample& s1,
                                            const PositionSample& s2) {
    if (!(s0.time < s1.time && s1.time < s2.time)) {
        throw std::invalid_argument("KinematicState: sample times must be strictly increasing");
    }
    KinematicState st;
    st.samples_ = {s0, s1, s2};

    const DirectionAngles dir = direction_angles(s1, s2);
    if (dir.stationary) {
        // Hovering convention: no heading, no motion.
        st.stationary_ = true;
        st.heading_ = {0.0, 0.0, 1.0};
        return st;
    }
    st.azimuth_ = dir.azimuth;
    st.polar_ = dir.polar;
    const double v1 = opar::speed(s0, s1);
    const double v2 = opar::speed(s1, s2);
    st.speed_ = v2;
    st.accel_ = opar::acceleration(v1, v2, s0.time, s2.time);
    st.heading_ = {std::sin(st.polar_) * std::cos(st.azimuth_),
                   std::sin(st.polar_) * std::sin(st.azimuth_),
                   std::cos(st.polar_)};
    return st;
}

KinematicState KinematicState::hovering(const Position3D& pos, double t, double spacing) {
    return from_samples({pos, t - 2.0 * spacing}, {pos, t - spacing}, {pos, t});
}

Position3D extrapolate(const KinematicState& state, double dt) {
    const double s = state.speed() * dt + 0.5 * state.acceleration() * dt * dt;
    const Position3D& u = state.heading();
    const Position3D& p = state.position();
    return {p.x + s * u.x, p.y + s * u.y, p.z + s * u.z};
}

double predicted_distance(const KinematicState& a, const KinematicState& b, double dt) {
    return distance(extrapolate(a, dt), extrapolate(b, dt));
}

namespace {

// Signed squared clearance, same sign as predicted_distance - range. Each
// node is extrapolated independently before differencing, which makes the
// value bit-identical under argument swap.
double squared_clearance(const KinematicState& a, const KinematicState& b,
                         double dt, double range) {
    return squared_distance(extrapolate(a, dt), extrapolate(b, dt)) - range * range;
}

}  // namespace

double link_lifetime(const KinematicState& a, const KinematicState& b,
                     double range, double horizon,
                     double march_step, double tolerance) {
    if (range <= 0.0) {
        throw std::invalid_argument("link_lifetime: range must be positive");
    }
    if (horizon <= 0.0) {
        throw std::invalid_argument("link_lifetime: horizon must be positive");
    }
    if (march_step <= 0.0 || tolerance <= 0.0) {
        throw std::invalid_argument("link_lifetime: march_step and tolerance must be positive");
    }

    if (squared_clearance(a, b, 0.0, range) > 0.0) {
        return 0.0;  // already out of range, dead link
    }

    // March forward until the pair is first predicted out of range, then
    // bisect the bracketing step down to `tolerance`.
    double lo = 0.0;
    while (lo < horizon) {
        const double hi = std::min(lo + march_step, horizon);
        if (squared_clearance(a, b, hi, range) > 0.0) {
            double lo2 = lo;
            double hi2 = hi;
            while (hi2 - lo2 > tolerance) {
                const double mid = 0.5 * (lo2 + hi2);
                if (squared_clearance(a, b, mid, range) > 0.0) {
                    hi2 = mid;
                } else {
                    lo2 = mid;
                }
            }
            return 0.5 * (lo2 + hi2);
        }
        lo = hi;
    }
    return horizon;  // never leaves range within the prediction window
}

}  // namespace opar
