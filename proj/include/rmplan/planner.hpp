// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rmplan/graph.hpp"

namespace rmplan {

enum class PlanMode { Optimal, Quantized, OutageTolerant };

// Which channel assumptions the planning-side SINR map was built under.
// Actual uses the scene loads and geometry-based LoS classification; the
// others are the benchmark variants (saturated loads, ignored interference,
// forced LoS, forced NLoS).
enum class PlanningBasis { Actual, WorstCaseLoad, ZeroLoad, AllLos, AllNlos };

std::string to_string(PlanningBasis basis);
PlanningBasis planning_basis_from_string(const std::string& s);

struct MissionSpec {
    Vec3 start;
    Vec3 goal;
    double speed = 10.0;  // m/s
    double gamma_t_db = 0.0;
    PlanMode mode = PlanMode::Optimal;
    int kappa_xy = 1;
    int kappa_z = 1;
    double outage_tolerance_m = 0.0;
    PlanningBasis planning_basis = PlanningBasis::Actual;
};

// Compact mode tag used in path files and sweep rows: "optimal",
// "quantized:KXYxKZ", or "outage:OT".
std::string mode_label(const MissionSpec& mission);

enum class PlanStatus {
    Ok,
    StartOffGrid,
    GoalOffGrid,
    StartInfeasible,
    GoalInfeasible,
    Disconnected,
};

std::string to_string(PlanStatus status);

struct Path {
    std::vector<Vec3> waypoints;
    double length_m = 0.0;
    double duration_s = 0.0;
    double outage_m = 0.0;
    bool feasible = false;
    PlanStatus status = PlanStatus::Disconnected;
};

// Minimum-length route between two cells of an already-built graph; bridge
// arcs are expanded into their rectilinear leg waypoints. duration_s and
// outage_m are left zero for the caller to fill.
Path shortest_path(const GridGraph& graph, const CellIndex& start, const CellIndex& goal);

// Full planning pipeline. The feasible set is thresholded from sinr_planning
// at the mission target; outage_m on the result is always measured against
// sinr_actual. Quantized mode with both ratios 1 runs the exact pipeline, so
// it matches Optimal bit for bit. Endpoints must sit on lattice cell centers.
Path plan(const MissionSpec& mission, const SinrMap& sinr_actual, const SinrMap& sinr_planning);

// Outage-tolerant route on a prebuilt feasible map; outage_m is measured
// against that same map. duration_s is left zero.
Path plan_outage_tolerant(const FeasibleMap& map, double outage_tolerance_m, const Vec3& start,
                          const Vec3& goal);

std::string path_to_json(const Path& path, const MissionSpec& mission);
void save_path(const Path& path, const MissionSpec& mission, const std::string& file);

}  // namespace rmplan
