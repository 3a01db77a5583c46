// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace rmplan {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double horizontal_norm() const { return std::sqrt(x * x + y * y); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (b - a).norm(); }

/// Axis-aligned cuboid standing on the ground plane (z in [0, height]).
struct Cuboid {
    double cx = 0.0;      // footprint center
    double cy = 0.0;
    double hx = 0.0;      // half-widths
    double hy = 0.0;
    double height = 0.0;
};

// Slab (interval clipping) test over the closed segment [a, b].
// Boundaries are inclusive: a segment that only grazes a face still intersects.
bool segment_intersects_cuboid(const Vec3& a, const Vec3& b, const Cuboid& c);

}  // namespace rmplan
