// SPDX-License-Identifier: Apache-2.0
#include "rmplan/planner.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rmplan/eval.hpp"

namespace rmplan {

namespace {

using json = nlohmann::ordered_json;

bool grids_match(const GridSpec& a, const GridSpec& b) {
    return a.origin == b.origin && a.delta == b.delta && a.nx == b.nx && a.ny == b.ny &&
           a.nz == b.nz;
}

void append_waypoint(std::vector<Vec3>& pts, const Vec3& p) {
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
}

// Expands a route into waypoints, inserting the two rectilinear corner points
// of each bridge arc (degenerate legs collapse).
std::vector<Vec3> route_waypoints(const GridGraph& g, const RouteResult& route) {
    std::vector<Vec3> pts;
    if (route.vertices.empty()) return pts;
    pts.push_back(g.grid.center(g.vertex_cell[route.vertices[0]]));
    for (std::size_t s = 0; s + 1 < route.vertices.size(); ++s) {
        const CellIndex a = g.vertex_cell[route.vertices[s]];
        const CellIndex b = g.vertex_cell[route.vertices[s + 1]];
        const ArcKind kind = g.kind.empty() ? ArcKind::Direct : g.kind[route.arcs[s]];
        if (kind == ArcKind::BridgeXyz) {
            append_waypoint(pts, g.grid.center({b.i, a.j, a.k}));
            append_waypoint(pts, g.grid.center({b.i, b.j, a.k}));
        } else if (kind == ArcKind::BridgeZyx) {
            append_waypoint(pts, g.grid.center({a.i, a.j, b.k}));
            append_waypoint(pts, g.grid.center({a.i, b.j, b.k}));
        }
        append_waypoint(pts, g.grid.center(b));
    }
    return pts;
}

Path no_path(PlanStatus status) {
    Path p;
    p.status = status;
    p.feasible = false;
    return p;
}

Path route_on_graph(const GridGraph& graph, const CellIndex& start, const CellIndex& goal) {
    if (graph.vertex_of(start) == GridGraph::kNoVertex) return no_path(PlanStatus::StartInfeasible);
    if (graph.vertex_of(goal) == GridGraph::kNoVertex) return no_path(PlanStatus::GoalInfeasible);
    if (!check_feasibility(graph, start, goal)) return no_path(PlanStatus::Disconnected);
    const RouteResult route = dijkstra(graph, graph.vertex_of(start), graph.vertex_of(goal));
    Path p;
    p.feasible = route.reachable;
    p.status = route.reachable ? PlanStatus::Ok : PlanStatus::Disconnected;
    p.length_m = route.length_m;
    p.waypoints = route_waypoints(graph, route);
    return p;
}

}  // namespace

std::string to_string(PlanningBasis basis) {
    switch (basis) {
        case PlanningBasis::Actual: return "actual";
        case PlanningBasis::WorstCaseLoad: return "worst-case-load";
        case PlanningBasis::ZeroLoad: return "zero-load";
        case PlanningBasis::AllLos: return "all-los";
        case PlanningBasis::AllNlos: return "all-nlos";
    }
    return "actual";
}

PlanningBasis planning_basis_from_string(const std::string& s) {
    if (s == "actual") return PlanningBasis::Actual;
    if (s == "worst-case-load") return PlanningBasis::WorstCaseLoad;
    if (s == "zero-load") return PlanningBasis::ZeroLoad;
    if (s == "all-los") return PlanningBasis::AllLos;
    if (s == "all-nlos") return PlanningBasis::AllNlos;
    throw std::invalid_argument("unknown planning basis: " + s);
}

std::string mode_label(const MissionSpec& mission) {
    std::ostringstream out;
    switch (mission.mode) {
        case PlanMode::Optimal:
            out << "optimal";
            break;
        case PlanMode::Quantized:
            out << "quantized:" << mission.kappa_xy << "x" << mission.kappa_z;
            break;
        case PlanMode::OutageTolerant:
            out << "outage:" << mission.outage_tolerance_m;
            break;
    }
    return out.str();
}

std::string to_string(PlanStatus status) {
    switch (status) {
        case PlanStatus::Ok: return "ok";
        case PlanStatus::StartOffGrid: return "start-off-grid";
        case PlanStatus::GoalOffGrid: return "goal-off-grid";
        case PlanStatus::StartInfeasible: return "start-infeasible";
        case PlanStatus::GoalInfeasible: return "goal-infeasible";
        case PlanStatus::Disconnected: return "disconnected";
    }
    return "disconnected";
}

Path shortest_path(const GridGraph& graph, const CellIndex& start, const CellIndex& goal) {
    return route_on_graph(graph, start, goal);
}

Path plan(const MissionSpec& mission, const SinrMap& sinr_actual, const SinrMap& sinr_planning) {
    if (!grids_match(sinr_actual.grid, sinr_planning.grid))
        throw std::invalid_argument("plan: actual and planning maps use different grids");
    const GridSpec& grid = sinr_planning.grid;
    if (!grid.on_lattice(mission.start)) return no_path(PlanStatus::StartOffGrid);
    if (!grid.on_lattice(mission.goal)) return no_path(PlanStatus::GoalOffGrid);
    const CellIndex start = *grid.cell_of(mission.start);
    const CellIndex goal = *grid.cell_of(mission.goal);

    const FeasibleMap fmap = build_feasible_map(sinr_planning, mission.gamma_t_db);

    Path path;
    const bool identity_quantization =
        mission.mode == PlanMode::Quantized && mission.kappa_xy == 1 && mission.kappa_z == 1;
    if (mission.mode == PlanMode::Optimal || identity_quantization) {
        path = route_on_graph(build_graph(fmap), start, goal);
    } else if (mission.mode == PlanMode::Quantized) {
        const QuantizedFeasibleMap qmap =
            quantize_feasible_map(fmap, mission.kappa_xy, mission.kappa_z);
        const auto qstart = qmap.grid.cell_of(mission.start);
        const auto qgoal = qmap.grid.cell_of(mission.goal);
        if (!qstart) return no_path(PlanStatus::StartOffGrid);
        if (!qgoal) return no_path(PlanStatus::GoalOffGrid);
        path = route_on_graph(build_quantized_graph(qmap), *qstart, *qgoal);
        if (path.feasible) {
            // Straight stubs connect the true endpoints to their coarse cell
            // centers; each stub stays inside its own (feasible) coarse cell.
            std::vector<Vec3> pts;
            pts.push_back(mission.start);
            for (const Vec3& p : path.waypoints) append_waypoint(pts, p);
            append_waypoint(pts, mission.goal);
            path.waypoints = std::move(pts);
            path.length_m += distance(mission.start, qmap.grid.center(*qstart)) +
                             distance(qmap.grid.center(*qgoal), mission.goal);
        }
    } else {
        path = plan_outage_tolerant(fmap, mission.outage_tolerance_m, mission.start, mission.goal);
    }

    if (path.feasible) {
        path.duration_s = path.length_m / mission.speed;
        path.outage_m = outage_vs_sinr(path.waypoints, sinr_actual, mission.gamma_t_db).outage_m;
    }
    return path;
}

Path plan_outage_tolerant(const FeasibleMap& map, double outage_tolerance_m, const Vec3& start,
                          const Vec3& goal) {
    if (!map.grid.on_lattice(start)) return no_path(PlanStatus::StartOffGrid);
    if (!map.grid.on_lattice(goal)) return no_path(PlanStatus::GoalOffGrid);
    const GridGraph graph = build_outage_graph(map, outage_tolerance_m);
    Path path = route_on_graph(graph, *map.grid.cell_of(start), *map.grid.cell_of(goal));
    if (path.feasible) path.outage_m = outage_vs_feasible(path.waypoints, map).outage_m;
    return path;
}

std::string path_to_json(const Path& path, const MissionSpec& mission) {
    json j;
    j["mission"] = {{"start", {mission.start.x, mission.start.y, mission.start.z}},
                    {"goal", {mission.goal.x, mission.goal.y, mission.goal.z}},
                    {"speed", mission.speed},
                    {"gamma_t_db", mission.gamma_t_db},
                    {"mode", mode_label(mission)},
                    {"planning_basis", to_string(mission.planning_basis)}};
    j["status"] = to_string(path.status);
    j["feasible"] = path.feasible;
    j["n_waypoints"] = path.waypoints.size();
    json wp = json::array();
    for (const Vec3& p : path.waypoints) wp.push_back({p.x, p.y, p.z});
    j["waypoints"] = std::move(wp);
    j["length_m"] = path.length_m;
    j["duration_s"] = path.duration_s;
    j["outage_m"] = path.outage_m;
    return j.dump(2) + "\n";
}

void save_path(const Path& path, const MissionSpec& mission, const std::string& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("save_path: cannot open " + file);
    out << path_to_json(path, mission);
}

}  // namespace rmplan
