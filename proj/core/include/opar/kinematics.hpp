#pragma once

#include <array>

#include "opar/geometry.hpp"

namespace opar {

/// Heading of a moving node: azimuthal angle in the x-y plane plus polar
/// angle measured from the +z axis. A zero displacement has no defined
/// heading; by convention it maps to (0, 0) with `stationary` set.
struct DirectionAngles {
    double azimuth = 0.0;  // (-pi, pi]
    double polar = 0.0;    // [0, pi]
    bool stationary = false;
};

/// Azimuthal/polar direction of the displacement from `from` to `to`.
/// Requires to.time > from.time.
DirectionAngles direction_angles(const PositionSample& from, const PositionSample& to);

/// Mean speed between two samples (Euclidean displacement over elapsed time).
/// Requires to.time > from.time.
double speed(const PositionSample& from, const PositionSample& to);

/// Mean acceleration between two speed estimates, divided by the full
/// three-sample window (t2 - t0). Requires t2 > t0.
double acceleration(double v1, double v2, double t0, double t2);

/// Position reached from `p` after `dt` seconds of motion along the heading
/// (azimuth, polar) at initial speed `spd` with constant acceleration `acc`.
Position3D advance_position(const Position3D& p, double azimuth, double polar,
                            double spd, double acc, double dt);

/// Motion state of one node derived from its three most recent position
/// samples: heading from the last displacement, speed from the last sample
/// pair, acceleration from the speed change across the window. A node whose
/// last displacement is zero is treated as hovering: angles, speed and
/// acceleration all zero, so extrapolation holds its position.
class KinematicState {
public:
    static KinematicState from_samples(const PositionSample& s0,
                                       const PositionSample& s1,
                                       const PositionSample& s2);

    /// Convenience for a node hovering at `pos`, with synthetic sample times
    /// ending at `t` spaced `spacing` apart.
    static KinematicState hovering(const Position3D& pos, double t = 0.0,
                                   double spacing = 0.3);

    const Position3D& position() const { return samples_[2].position; }
    double time() const { return samples_[2].time; }
    const std::array<PositionSample, 3>& samples() const { return samples_; }

    double azimuth() const { return azimuth_; }
    double polar() const { return polar_; }
    double speed() const { return speed_; }
    double acceleration() const { return accel_; }
    bool stationary() const { return stationary_; }

    /// Unit heading vector (sin(polar)cos(azimuth), sin(polar)sin(azimuth), cos(polar)).
    const Position3D& heading() const { return heading_; }

private:
    KinematicState() = default;

    std::array<PositionSample, 3> samples_{};
    double azimuth_ = 0.0;
    double polar_ = 0.0;
    double speed_ = 0.0;
    double accel_ = 0.0;
    bool stationary_ = false;
    Position3D heading_{0.0, 0.0, 1.0};
};

/// Predicted position `dt` seconds past the state's last sample.
Position3D extrapolate(const KinematicState& state, double dt);

/// Predicted distance between two nodes `dt` seconds from now.
double predicted_distance(const KinematicState& a, const KinematicState& b, double dt);

/// Predicted link lifetime: 0 if the nodes are already out of range
/// (distance > range), otherwise the first time in (0, horizon] at which the
/// predicted distance crosses `range`, or `horizon` if no crossing occurs.
/// The crossing is bracketed by marching in `march_step` increments and then
/// bisected down to `tolerance` seconds. With acceleration the
/// distance-vs-time curve can cross the range more than once; the first exit
/// is returned.
double link_lifetime(const KinematicState& a, const KinematicState& b,
                     double range, double horizon,
                     double march_step = 0.1, double tolerance = 1e-3);

}  // namespace opar
