// SPDX-License-Identifier: Apache-2.0
#include "rmplan/geometry.hpp"

#include <algorithm>

namespace rmplan {

bool segment_intersects_cuboid(const Vec3& a, const Vec3& b, const Cuboid& c) {
    const double lo[3] = {c.cx - c.hx, c.cy - c.hy, 0.0};
    const double hi[3] = {c.cx + c.hx, c.cy + c.hy, c.height};
    const double p[3] = {a.x, a.y, a.z};
    const double d[3] = {b.x - a.x, b.y - a.y, b.z - a.z};

    double t0 = 0.0;
    double t1 = 1.0;
    for (int ax = 0; ax < 3; ++ax) {
        if (d[ax] == 0.0) {
            if (p[ax] < lo[ax] || p[ax] > hi[ax]) return false;
            continue;
        }
        double ta = (lo[ax] - p[ax]) / d[ax];
        double tb = (hi[ax] - p[ax]) / d[ax];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    return true;
}

}  // namespace rmplan
