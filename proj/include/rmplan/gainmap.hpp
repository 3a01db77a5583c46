// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rmplan/channel.hpp"
#include "rmplan/exec.hpp"
#include "rmplan/grid.hpp"

namespace rmplan {

// Truncated per-GBS map of large-scale amplitude gains (dB). Only the tight
// bounding box of cells with gain >= epsilon_db is stored; cells inside the
// box that fall below the threshold hold NaN ("void") and look up as zero
// linear gain. origin is the center of the lowest-index stored cell, so cell
// (i,j,k) has center origin + [i,j,k] * delta_d.
struct ChannelGainMap {
    int gbs_id = 0;
    Vec3 origin;
    double delta_d = 0.0;
    int nx = 0;
    int ny = 0;
    int nz = 0;
    double epsilon_db = 0.0;
    std::vector<double> gain_db;  // size nx*ny*nz, NaN = void

    bool empty() const { return nx == 0 || ny == 0 || nz == 0; }
    std::size_t flat(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * ny + j) * nx + i;
    }
};

// Evaluates the channel at every cell center of grid and keeps the bounding
// box of cells at or above epsilon_db. A threshold no cell reaches yields an
// empty map. Serial and Parallel produce bitwise-identical maps.
ChannelGainMap build_gain_map(const Scene& scene, const ChannelParams& params,
                              const AntennaModel& antenna, const Gbs& gbs, const GridSpec& grid,
                              double epsilon_db, LosOverride override_mode = LosOverride::Auto,
                              Exec exec = Exec::Serial);

// Linear amplitude gain at an arbitrary position: 10^(stored/10) when the
// position falls in a stored non-void cell (stored values are half-power dB),
// 0 otherwise. Boundary ties resolve to the lexicographically smaller cell.
double lookup_gain(const ChannelGainMap& map, const Vec3& u);

std::string serialize_gain_map(const ChannelGainMap& map);
ChannelGainMap parse_gain_map(const std::string& text);

void save_gain_map(const ChannelGainMap& map, const std::string& path);
ChannelGainMap load_gain_map(const std::string& path);

}  // namespace rmplan
