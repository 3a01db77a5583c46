// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rmplan/eval.hpp"
#include "rmplan/rng.hpp"

namespace fixtures {

inline rmplan::Region paper_region() { return {630.0, 90.0, 130.0, 10.0}; }

inline rmplan::SceneConfig paper_config() {
    rmplan::SceneConfig cfg;
    cfg.n_gbs = 6;
    cfg.n_obstacles = 30;
    cfg.region = paper_region();
    cfg.loads = {0.0318, 0.6561, 0.3223, 0.9679, 0.2598, 0.7672};
    return cfg;
}

// Free-standing feasible map on a zero-origin lattice, all cells feasible
// except the listed flat indices.
inline rmplan::FeasibleMap make_fmap(int nx, int ny, int nz,
                                     const std::vector<std::size_t>& blocked = {},
                                     double delta = 10.0) {
    rmplan::FeasibleMap map;
    map.grid.origin = {0.0, 0.0, 0.0};
    map.grid.delta = {delta, delta, delta};
    map.grid.nx = nx;
    map.grid.ny = ny;
    map.grid.nz = nz;
    map.gamma_t_db = 0.0;
    map.feasible.assign(map.grid.size(), 1);
    for (std::size_t f : blocked) map.feasible[f] = 0;
    return map;
}

inline rmplan::FeasibleMap random_fmap(int nx, int ny, int nz, double p_infeasible,
                                       std::uint64_t seed) {
    rmplan::FeasibleMap map = make_fmap(nx, ny, nz);
    rmplan::Rng rng(seed);
    for (auto& f : map.feasible) f = rng.bernoulli(p_infeasible) ? 0 : 1;
    return map;
}

// Small deterministic scene plus maps, for planner and eval tests.
struct SmallWorld {
    rmplan::Scene scene;
    rmplan::ChannelParams params;
    rmplan::AntennaModel antenna;
    rmplan::GridSpec grid;
    std::vector<rmplan::ChannelGainMap> gain_maps;
    std::vector<double> loads;
    rmplan::SinrMap sinr;
};

inline SmallWorld small_world(std::uint64_t seed = 3, int n_obstacles = 6) {
    SmallWorld w;
    rmplan::SceneConfig cfg;
    cfg.n_gbs = 3;
    cfg.n_obstacles = n_obstacles;
    cfg.region = {120.0, 90.0, 130.0, 10.0};
    cfg.loads = {0.3, 0.9, 0.1};
    w.scene = rmplan::generate_scene(cfg, seed);
    w.grid = rmplan::grid_for_region(w.scene.region, 10.0);
    for (const rmplan::Gbs& g : w.scene.gbs_list)
        w.gain_maps.push_back(rmplan::build_gain_map(w.scene, w.params, w.antenna, g, w.grid,
                                                     rmplan::default_epsilon_db(w.params)));
    w.loads = cfg.loads;
    w.sinr = rmplan::build_sinr_map(w.gain_maps, w.loads, w.params, w.grid);
    return w;
}

}  // namespace fixtures
