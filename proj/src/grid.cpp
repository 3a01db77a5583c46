// SPDX-License-Identifier: Apache-2.0
#include "rmplan/grid.hpp"

#include <stdexcept>

namespace rmplan {

namespace {

int exact_cell_count(double extent, double delta, const char* axis) {
    const double ratio = extent / delta;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw std::invalid_argument(std::string("grid_for_region: extent not a multiple of delta on ") + axis);
    return static_cast<int>(rounded);
}

}  // namespace

GridSpec grid_for_region(const Region& region, double delta_d) {
    if (!region_valid(region)) throw std::invalid_argument("grid_for_region: invalid region");
    if (!(delta_d > 0.0)) throw std::invalid_argument("grid_for_region: delta must be positive");
    GridSpec g;
    g.origin = {0.0, 0.0, region.h_min};
    g.delta = {delta_d, delta_d, delta_d};
    g.nx = exact_cell_count(region.edge_length, delta_d, "x");
    g.ny = g.nx;
    g.nz = exact_cell_count(region.h_max - region.h_min, delta_d, "z");
    return g;
}

}  // namespace rmplan
