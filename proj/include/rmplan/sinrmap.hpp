// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmplan/exec.hpp"
#include "rmplan/gainmap.hpp"
#include "rmplan/grid.hpp"

namespace rmplan {

// Expected SINR (dB) under best-GBS association at every cell of the planning
// lattice. Cells no map covers hold -inf and assoc 0; otherwise assoc is the
// serving GBS id, ties going to the smallest id.
struct SinrMap {
    GridSpec grid;
    std::vector<double> sinr_db;
    std::vector<int> assoc;
    std::string basis = "actual";
};

// For each cell: extract each GBS's linear amplitude gain, form
// sigma_tilde^2 = sigma^2 + P * sum_m l_m h_m^2, then maximize
// P h_m^2 / (sigma_tilde^2 - l_m h_m^2 P) over m. Serial and Parallel give
// bitwise-identical maps.
SinrMap build_sinr_map(const std::vector<ChannelGainMap>& gain_maps,
                       const std::vector<double>& loads, const ChannelParams& params,
                       const GridSpec& grid, Exec exec = Exec::Serial);

struct FeasibleMap {
    GridSpec grid;
    std::vector<std::uint8_t> feasible;
    double gamma_t_db = 0.0;
};

// feasible = (sinr_db >= gamma_t_db), pointwise.
FeasibleMap build_feasible_map(const SinrMap& map, double gamma_t_db);

// Coarsened feasible map: each coarse cell covers a kappa_xy x kappa_xy x
// kappa_z block of fine cells and is feasible only if the whole block is.
// Odd ratios keep coarse cell centers on the fine lattice.
struct QuantizedFeasibleMap {
    GridSpec grid;  // coarse lattice
    int kappa_xy = 1;
    int kappa_z = 1;
    std::vector<std::uint8_t> feasible;
    double gamma_t_db = 0.0;
};

QuantizedFeasibleMap quantize_feasible_map(const FeasibleMap& map, int kappa_xy, int kappa_z);

std::string serialize_sinr_map(const SinrMap& map);
SinrMap parse_sinr_map(const std::string& text);
void save_sinr_map(const SinrMap& map, const std::string& path);
SinrMap load_sinr_map(const std::string& path);

std::string serialize_feasible_map(const FeasibleMap& map);
FeasibleMap parse_feasible_map(const std::string& text);

std::string serialize_quantized_map(const QuantizedFeasibleMap& map);
QuantizedFeasibleMap parse_quantized_map(const std::string& text);

}  // namespace rmplan
