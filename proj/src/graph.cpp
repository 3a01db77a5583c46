// SPDX-License-Identifier: Apache-2.0
#include "rmplan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace rmplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool cell_lex_less(const CellIndex& a, const CellIndex& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
}

struct Offset {
    int di, dj, dk;
    double w;
};

// Offsets in fixed (dk, dj, di) order; weights precomputed once per class so
// equal-class arcs carry bitwise-equal weights.
std::vector<Offset> make_offsets(const Vec3& delta, bool vertical_diagonals) {
    std::vector<Offset> out;
    for (int dk = -1; dk <= 1; ++dk)
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                if (!vertical_diagonals && dk != 0 && (di != 0 || dj != 0)) continue;
                const double x = di * delta.x, y = dj * delta.y, z = dk * delta.z;
                out.push_back({di, dj, dk, std::sqrt(x * x + y * y + z * z)});
            }
    return out;
}

void index_vertices(const GridSpec& grid, const std::vector<std::uint8_t>& feasible,
                    GridGraph& g) {
    g.grid = grid;
    g.cell_vertex.assign(grid.size(), GridGraph::kNoVertex);
    for (std::size_t f = 0; f < feasible.size(); ++f) {
        if (!feasible[f]) continue;
        g.cell_vertex[f] = static_cast<std::uint32_t>(g.vertex_cell.size());
        g.vertex_cell.push_back(grid.unflat(f));
    }
}

void build_adjacency(const std::vector<Offset>& offsets, GridGraph& g) {
    const std::size_t nv = g.n_vertices();
    g.offsets.assign(nv + 1, 0);

#pragma omp parallel for schedule(static)
    for (long long v = 0; v < static_cast<long long>(nv); ++v) {
        const CellIndex c = g.vertex_cell[v];
        std::size_t deg = 0;
        for (const Offset& o : offsets)
            if (g.vertex_of({c.i + o.di, c.j + o.dj, c.k + o.dk}) != GridGraph::kNoVertex) ++deg;
        g.offsets[v + 1] = deg;
    }
    for (std::size_t v = 0; v < nv; ++v) g.offsets[v + 1] += g.offsets[v];

    g.nbr.resize(g.offsets[nv]);
    g.weight.resize(g.offsets[nv]);
#pragma omp parallel for schedule(static)
    for (long long v = 0; v < static_cast<long long>(nv); ++v) {
        const CellIndex c = g.vertex_cell[v];
        std::size_t at = g.offsets[v];
        for (const Offset& o : offsets) {
            const std::uint32_t w = g.vertex_of({c.i + o.di, c.j + o.dj, c.k + o.dk});
            if (w == GridGraph::kNoVertex) continue;
            g.nbr[at] = w;
            g.weight[at] = o.w;
            ++at;
        }
    }
}

// In-outage of one axis-aligned leg between cell centers: half a cell at each
// end, full cells between, counting pieces whose cell is infeasible.
double leg_outage(const FeasibleMap& map, int ax, CellIndex at, int from, int to) {
    if (from == to) return 0.0;
    const GridSpec& g = map.grid;
    const double step = ax == 0 ? g.delta.x : (ax == 1 ? g.delta.y : g.delta.z);
    const int dir = to > from ? 1 : -1;
    double total = 0.0;
    for (int p = from; p != to + dir; p += dir) {
        int* slot = ax == 0 ? &at.i : (ax == 1 ? &at.j : &at.k);
        *slot = p;
        if (map.feasible[g.flat(at)]) continue;
        total += (p == from || p == to) ? step / 2.0 : step;
    }
    return total;
}

}  // namespace

double connector_outage_m(const FeasibleMap& map, const CellIndex& a, const CellIndex& b) {
    double total = leg_outage(map, 0, {a.i, a.j, a.k}, a.i, b.i);
    total += leg_outage(map, 1, {b.i, a.j, a.k}, a.j, b.j);
    total += leg_outage(map, 2, {b.i, b.j, a.k}, a.k, b.k);
    return total;
}

GridGraph build_graph(const FeasibleMap& map) {
    GridGraph g;
    g.mode = GraphMode::Full26;
    index_vertices(map.grid, map.feasible, g);
    build_adjacency(make_offsets(map.grid.delta, true), g);
    return g;
}

GridGraph build_quantized_graph(const QuantizedFeasibleMap& map) {
    GridGraph g;
    g.mode = GraphMode::Quantized10;
    index_vertices(map.grid, map.feasible, g);
    build_adjacency(make_offsets(map.grid.delta, false), g);
    return g;
}

GridGraph build_outage_graph(const FeasibleMap& map, double outage_tolerance_m) {
    if (outage_tolerance_m < 0.0)
        throw std::invalid_argument("build_outage_graph: negative tolerance");
    GridGraph g;
    g.mode = GraphMode::OutageExtended;
    index_vertices(map.grid, map.feasible, g);

    const GridSpec& grid = g.grid;
    const std::vector<Offset> direct = make_offsets(grid.delta, true);
    const double min_delta = std::min({grid.delta.x, grid.delta.y, grid.delta.z});
    // Any qualifying bridge decomposes, at feasible cells its connector passes
    // through, into direct arcs plus bridges spanning single infeasible runs,
    // so a per-axis reach of ceil(O_T / delta) + 2 cells loses no route.
    long long reach = static_cast<long long>(std::ceil(outage_tolerance_m / min_delta)) + 2;
    reach = std::min<long long>(reach, std::max({grid.nx, grid.ny, grid.nz}));
    const int r = static_cast<int>(reach);

    struct Arc {
        std::uint32_t to;
        double w;
        ArcKind kind;
        double outage;
    };
    const std::size_t nv = g.n_vertices();
    std::vector<std::vector<Arc>> adj(nv);

#pragma omp parallel for schedule(dynamic, 32)
    for (long long v = 0; v < static_cast<long long>(nv); ++v) {
        const CellIndex c = g.vertex_cell[v];
        for (const Offset& o : direct) {
            const std::uint32_t w = g.vertex_of({c.i + o.di, c.j + o.dj, c.k + o.dk});
            if (w != GridGraph::kNoVertex)
                adj[v].push_back({w, o.w, ArcKind::Direct, 0.0});
        }
        for (int dk = -r; dk <= r; ++dk)
            for (int dj = -r; dj <= r; ++dj)
                for (int di = -r; di <= r; ++di) {
                    if (std::max({std::abs(di), std::abs(dj), std::abs(dk)}) <= 1) continue;
                    const CellIndex d{c.i + di, c.j + dj, c.k + dk};
                    const std::uint32_t w = g.vertex_of(d);
                    if (w == GridGraph::kNoVertex) continue;
                    const double fwd = connector_outage_m(map, c, d);
                    const double rev = connector_outage_m(map, d, c);
                    const double outage = std::min(fwd, rev);
                    if (outage <= 0.0 || outage > outage_tolerance_m) continue;
                    ArcKind kind;
                    if (fwd < rev)
                        kind = ArcKind::BridgeXyz;
                    else if (rev < fwd)
                        kind = ArcKind::BridgeZyx;
                    else
                        kind = cell_lex_less(c, d) ? ArcKind::BridgeXyz : ArcKind::BridgeZyx;
                    const double len = std::abs(di) * grid.delta.x + std::abs(dj) * grid.delta.y +
                                       std::abs(dk) * grid.delta.z;
                    adj[v].push_back({w, len, kind, outage});
                }
    }

    g.offsets.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) g.offsets[v + 1] = g.offsets[v] + adj[v].size();
    g.nbr.resize(g.offsets[nv]);
    g.weight.resize(g.offsets[nv]);
    g.kind.resize(g.offsets[nv]);
    g.arc_outage_m.resize(g.offsets[nv]);
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t at = g.offsets[v];
        for (const Arc& a : adj[v]) {
            g.nbr[at] = a.to;
            g.weight[at] = a.w;
            g.kind[at] = a.kind;
            g.arc_outage_m[at] = a.outage;
            ++at;
        }
    }
    return g;
}

bool check_feasibility(const GridGraph& graph, const CellIndex& start, const CellIndex& goal) {
    const std::uint32_t s = graph.vertex_of(start);
    const std::uint32_t t = graph.vertex_of(goal);
    if (s == GridGraph::kNoVertex || t == GridGraph::kNoVertex) return false;
    if (s == t) return true;
    std::vector<std::uint8_t> seen(graph.n_vertices(), 0);
    std::vector<std::uint32_t> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (std::size_t a = graph.offsets[u]; a < graph.offsets[u + 1]; ++a) {
            const std::uint32_t v = graph.nbr[a];
            if (seen[v]) continue;
            if (v == t) return true;
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    return false;
}

RouteResult dijkstra(const GridGraph& graph, std::uint32_t start, std::uint32_t goal) {
    RouteResult res;
    const std::size_t nv = graph.n_vertices();
    if (start >= nv || goal >= nv) return res;

    std::vector<double> dist(nv, kInf);
    std::vector<std::uint32_t> pred(nv, GridGraph::kNoVertex);
    std::vector<std::size_t> pred_arc(nv, 0);
    using Entry = std::pair<double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[start] = 0.0;
    heap.push({0.0, start});

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;  // stale entry
        if (u == goal) break;
        for (std::size_t a = graph.offsets[u]; a < graph.offsets[u + 1]; ++a) {
            const std::uint32_t v = graph.nbr[a];
            const double nd = d + graph.weight[a];
            if (nd < dist[v]) {
                dist[v] = nd;
                pred[v] = u;
                pred_arc[v] = a;
                heap.push({nd, v});
            } else if (nd == dist[v] && pred[v] != GridGraph::kNoVertex &&
                       cell_lex_less(graph.vertex_cell[u], graph.vertex_cell[pred[v]])) {
                pred[v] = u;
                pred_arc[v] = a;
            }
        }
    }

    if (dist[goal] == kInf) return res;
    res.reachable = true;
    res.length_m = dist[goal];
    for (std::uint32_t v = goal; v != start; v = pred[v]) {
        res.vertices.push_back(v);
        res.arcs.push_back(pred_arc[v]);
    }
    res.vertices.push_back(start);
    std::reverse(res.vertices.begin(), res.vertices.end());
    std::reverse(res.arcs.begin(), res.arcs.end());
    return res;
}

}  // namespace rmplan
