// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cmath>
#include <optional>

#include "rmplan/geometry.hpp"
#include "rmplan/scene.hpp"

namespace rmplan {

struct CellIndex {
    int i = 0;
    int j = 0;
    int k = 0;
    bool operator==(const CellIndex& o) const { return i == o.i && j == o.j && k == o.k; }
    bool operator!=(const CellIndex& o) const { return !(*this == o); }
};

// Cell lattice over a box. origin is the minimum corner; cell centers sit at
// origin + (index + 1/2) * delta per axis. Storage order is i fastest, then j,
// then k.
struct GridSpec {
    Vec3 origin;
    Vec3 delta;
    int nx = 0;
    int ny = 0;
    int nz = 0;

    std::size_t size() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }

    bool contains(const CellIndex& c) const {
        return c.i >= 0 && c.i < nx && c.j >= 0 && c.j < ny && c.k >= 0 && c.k < nz;
    }

    std::size_t flat(const CellIndex& c) const {
        return (static_cast<std::size_t>(c.k) * ny + c.j) * nx + c.i;
    }

    CellIndex unflat(std::size_t f) const {
        const int i = static_cast<int>(f % nx);
        const int j = static_cast<int>((f / nx) % ny);
        const int k = static_cast<int>(f / (static_cast<std::size_t>(nx) * ny));
        return {i, j, k};
    }

    Vec3 center(const CellIndex& c) const {
        return {origin.x + (c.i + 0.5) * delta.x, origin.y + (c.j + 0.5) * delta.y,
                origin.z + (c.k + 0.5) * delta.z};
    }

    // Cell containing p (center within delta/2 per axis). A point exactly on a
    // shared cell boundary resolves to the lexicographically smaller index.
    std::optional<CellIndex> cell_of(const Vec3& p) const {
        CellIndex c;
        const double t[3] = {(p.x - origin.x) / delta.x, (p.y - origin.y) / delta.y,
                             (p.z - origin.z) / delta.z};
        const int n[3] = {nx, ny, nz};
        int idx[3];
        for (int ax = 0; ax < 3; ++ax) {
            int v = static_cast<int>(std::ceil(t[ax] - 1.0));
            if (v == -1 && t[ax] >= 0.0) v = 0;  // low boundary belongs to the first cell
            if (v < 0 || v >= n[ax]) return std::nullopt;
            idx[ax] = v;
        }
        return CellIndex{idx[0], idx[1], idx[2]};
    }

    // True iff p coincides with a cell center (the planning-graph vertex set).
    bool on_lattice(const Vec3& p, double tol = 1e-9) const {
        auto c = cell_of(p);
        if (!c) return false;
        const Vec3 ctr = center(*c);
        return std::abs(p.x - ctr.x) <= tol && std::abs(p.y - ctr.y) <= tol &&
               std::abs(p.z - ctr.z) <= tol;
    }
};

// Lattice covering [0,L]^2 x [h_min, h_max] with uniform spacing delta_d.
// Both extents must be exact multiples of delta_d.
GridSpec grid_for_region(const Region& region, double delta_d);

}  // namespace rmplan
