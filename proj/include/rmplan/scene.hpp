// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmplan/geometry.hpp"

namespace rmplan {

// Axis-aligned square region [0,L]x[0,L] with the UAV altitude band and the
// common GBS antenna height.
struct Region {
    double edge_length = 0.0;  // L
    double h_min = 0.0;
    double h_max = 0.0;
    double h_gbs = 0.0;
};

bool region_valid(const Region& r);

struct Gbs {
    int id = 0;  // 1-based
    Vec3 position;
    double loading_factor = 0.0;
};

using Obstacle = Cuboid;

struct Scene {
    Region region;
    std::vector<Gbs> gbs_list;
    std::vector<Obstacle> obstacles;
    std::uint64_t seed = 0;
};

struct SceneConfig {
    int n_gbs = 1;
    int n_obstacles = 0;
    Region region;
    double obstacle_size_min = 50.0;   // footprint side length range
    double obstacle_size_max = 70.0;
    double obstacle_height_mean = 30.0;
    // Explicit per-GBS loads; empty means draw each load uniformly in [0,1].
    std::vector<double> loads;
};

// Deterministic for a given (config, seed). Draw order is part of the file
// format contract: GBS (x, y) pairs in id order, then loads in id order when
// not explicit, then per obstacle (cx, cy, side, height). Obstacle footprints
// are square. Heights are Rayleigh with the configured mean, redrawn while
// > h_min up to 10^4 times, then clamped.
Scene generate_scene(const SceneConfig& config, std::uint64_t seed);

// True iff no obstacle cuboid intersects the closed GBS-UAV segment.
// Grazing contact on a face counts as blocked.
bool is_los(const Scene& scene, const Gbs& gbs, const Vec3& uav_pos);

std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);

void save_scene(const Scene& scene, const std::string& path);
Scene load_scene(const std::string& path);

}  // namespace rmplan
