// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rmplan/sinrmap.hpp"

namespace rmplan {

enum class GraphMode { Full26, Quantized10, OutageExtended };

// How an arc is flown: straight line, or an axis-sequential rectilinear
// detour (x, y, z legs). BridgeXyz runs the legs from the arc tail,
// BridgeZyx is the same detour entered from the other end.
enum class ArcKind : std::uint8_t { Direct, BridgeXyz, BridgeZyx };

// Undirected grid graph in CSR form over the feasible cells of a lattice.
// Vertices are feasible cells in flat index order; both arc directions are
// stored. Weights are Euclidean meters (bridges: full rectilinear length).
struct GridGraph {
    static constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

    GraphMode mode = GraphMode::Full26;
    GridSpec grid;
    std::vector<std::uint32_t> cell_vertex;  // flat cell -> vertex id or kNoVertex
    std::vector<CellIndex> vertex_cell;
    std::vector<std::size_t> offsets;        // size n_vertices + 1
    std::vector<std::uint32_t> nbr;
    std::vector<double> weight;
    std::vector<ArcKind> kind;               // empty unless OutageExtended
    std::vector<double> arc_outage_m;        // empty unless OutageExtended

    std::size_t n_vertices() const { return vertex_cell.size(); }
    std::size_t n_edges() const { return nbr.size() / 2; }
    std::uint32_t vertex_of(const CellIndex& c) const {
        return grid.contains(c) ? cell_vertex[grid.flat(c)] : kNoVertex;
    }
};

// 26-neighbor graph: feasible cells within one lattice step per axis.
GridGraph build_graph(const FeasibleMap& map);

// 10-direction graph on the coarse lattice: 8 horizontal neighbors plus the
// two vertical ones. Diagonal vertical moves would leave the two coarse
// cells, so they are excluded.
GridGraph build_quantized_graph(const QuantizedFeasibleMap& map);

// 26-neighbor graph augmented with bridge arcs between feasible cells whose
// axis-sequential connector crosses infeasible cells for at most
// outage_tolerance_m meters (and more than zero; zero-outage connectors are
// already covered by direct arcs). Both leg orders are considered; an arc
// records the better one.
GridGraph build_outage_graph(const FeasibleMap& map, double outage_tolerance_m);

// In-outage length of the axis-sequential connector a -> b (x, then y, then z
// legs between cell centers): total length of pieces crossing infeasible or
// out-of-range cells. Exposed for verification.
double connector_outage_m(const FeasibleMap& map, const CellIndex& a, const CellIndex& b);

// True iff both cells are graph vertices and connected (breadth-first search).
bool check_feasibility(const GridGraph& graph, const CellIndex& start, const CellIndex& goal);

struct RouteResult {
    bool reachable = false;
    double length_m = 0.0;
    std::vector<std::uint32_t> vertices;   // start..goal, empty if unreachable
    std::vector<std::size_t> arcs;         // CSR arc index taken into vertices[i+1]
};

// Binary-heap Dijkstra. Among equal-length alternatives the predecessor with
// the lexicographically smaller cell index wins, so routes are reproducible.
RouteResult dijkstra(const GridGraph& graph, std::uint32_t start, std::uint32_t goal);

}  // namespace rmplan
