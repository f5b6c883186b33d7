#pragma once

#include <cmath>

namespace opar {

/// A point in meters. All coordinates are expected to be finite.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position3D&, const Position3D&) = default;
};

inline double distance(const Position3D& a, const Position3D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double squared_distance(const Position3D& a, const Position3D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

/// A node position recorded at a point in time. Within one node's history
/// the times are strictly increasing.
struct PositionSample {
    Position3D position;
    double time = 0.0;  // seconds

    friend bool operator==(const PositionSample&, const PositionSample&) = default;
};

/// Axis-aligned box [0, x_max] x [0, y_max] x [0, z_max] in meters.
struct Volume {
    double x_max = 0.0;
    double y_max = 0.0;
    double z_max = 0.0;

    bool contains(const Position3D& p) const {
        return p.x >= 0.0 && p.x <= x_max &&
               p.y >= 0.0 && p.y <= y_max &&
               p.z >= 0.0 && p.z <= z_max;
    }

    friend bool operator==(const Volume&, const Volume&) = default;
};

}  // namespace opar
