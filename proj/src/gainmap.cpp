// SPDX-License-Identifier: Apache-2.0
#include "rmplan/gainmap.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rmplan {

namespace {
using json = nlohmann::ordered_json;
constexpr int kMapFormatVersion = 1;
}  // namespace

ChannelGainMap build_gain_map(const Scene& scene, const ChannelParams& params,
                              const AntennaModel& antenna, const Gbs& gbs, const GridSpec& grid,
                              double epsilon_db, LosOverride override_mode, Exec exec) {
    const std::size_t n = grid.size();
    std::vector<double> full(n);

    const auto eval_cell = [&](std::size_t f) {
        full[f] = large_scale_gain_db(scene, params, antenna, gbs, grid.center(grid.unflat(f)),
                                      override_mode);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long f = 0; f < static_cast<long long>(n); ++f)
            eval_cell(static_cast<std::size_t>(f));
    } else {
        for (std::size_t f = 0; f < n; ++f) eval_cell(f);
    }

    // Tight bounding box of cells at or above the threshold.
    int lo[3] = {grid.nx, grid.ny, grid.nz};
    int hi[3] = {-1, -1, -1};
    for (std::size_t f = 0; f < n; ++f) {
        if (full[f] < epsilon_db) continue;
        const CellIndex c = grid.unflat(f);
        const int v[3] = {c.i, c.j, c.k};
        for (int ax = 0; ax < 3; ++ax) {
            lo[ax] = std::min(lo[ax], v[ax]);
            hi[ax] = std::max(hi[ax], v[ax]);
        }
    }

    ChannelGainMap map;
    map.gbs_id = gbs.id;
    map.delta_d = grid.delta.x;
    map.epsilon_db = epsilon_db;
    if (hi[0] < 0) return map;  // nothing above threshold

    map.nx = hi[0] - lo[0] + 1;
    map.ny = hi[1] - lo[1] + 1;
    map.nz = hi[2] - lo[2] + 1;
    map.origin = grid.center({lo[0], lo[1], lo[2]});
    map.gain_db.resize(static_cast<std::size_t>(map.nx) * map.ny * map.nz);
    for (int k = 0; k < map.nz; ++k)
        for (int j = 0; j < map.ny; ++j)
            for (int i = 0; i < map.nx; ++i) {
                const double g = full[grid.flat({lo[0] + i, lo[1] + j, lo[2] + k})];
                map.gain_db[map.flat(i, j, k)] =
                    g >= epsilon_db ? g : std::numeric_limits<double>::quiet_NaN();
            }
    return map;
}

double lookup_gain(const ChannelGainMap& map, const Vec3& u) {
    if (map.empty()) return 0.0;
    const double t[3] = {(u.x - map.origin.x) / map.delta_d, (u.y - map.origin.y) / map.delta_d,
                         (u.z - map.origin.z) / map.delta_d};
    const int n[3] = {map.nx, map.ny, map.nz};
    int idx[3];
    for (int ax = 0; ax < 3; ++ax) {
        // Nearest stored center, half-way ties toward the smaller index.
        const int v = static_cast<int>(std::ceil(t[ax] - 0.5));
        if (v < 0 || v >= n[ax]) return 0.0;
        idx[ax] = v;
    }
    const double g = map.gain_db[map.flat(idx[0], idx[1], idx[2])];
    if (std::isnan(g)) return 0.0;
    // Stored values are half the power-dB gain, so the full power ratio is
    // 10^(2g/10) and its square root, the linear amplitude, is 10^(g/10).
    return std::pow(10.0, g / 10.0);
}

std::string serialize_gain_map(const ChannelGainMap& map) {
    json j;
    j["version"] = kMapFormatVersion;
    j["kind"] = "gain";
    j["gbs_id"] = map.gbs_id;
    j["origin"] = {map.origin.x, map.origin.y, map.origin.z};
    j["delta"] = map.delta_d;
    j["dims"] = {map.nx, map.ny, map.nz};
    j["epsilon_db"] = map.epsilon_db;
    json gains = json::array();
    for (double g : map.gain_db) {
        if (std::isnan(g))
            gains.push_back(nullptr);
        else
            gains.push_back(g);
    }
    j["gains"] = std::move(gains);
    return j.dump() + "\n";
}

ChannelGainMap parse_gain_map(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("version") || j["version"].get<int>() != kMapFormatVersion)
        throw std::runtime_error("parse_gain_map: unsupported version");
    if (j.at("kind").get<std::string>() != "gain")
        throw std::runtime_error("parse_gain_map: wrong map kind");
    ChannelGainMap map;
    map.gbs_id = j.at("gbs_id").get<int>();
    const auto& o = j.at("origin");
    map.origin = {o.at(0).get<double>(), o.at(1).get<double>(), o.at(2).get<double>()};
    map.delta_d = j.at("delta").get<double>();
    const auto& d = j.at("dims");
    map.nx = d.at(0).get<int>();
    map.ny = d.at(1).get<int>();
    map.nz = d.at(2).get<int>();
    if (map.nx < 0 || map.ny < 0 || map.nz < 0)
        throw std::runtime_error("parse_gain_map: negative dims");
    map.epsilon_db = j.at("epsilon_db").get<double>();
    const auto& gains = j.at("gains");
    const std::size_t expect = static_cast<std::size_t>(map.nx) * map.ny * map.nz;
    if (gains.size() != expect) throw std::runtime_error("parse_gain_map: dims/gains mismatch");
    map.gain_db.reserve(expect);
    for (const auto& g : gains)
        map.gain_db.push_back(g.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                          : g.get<double>());
    return map;
}

void save_gain_map(const ChannelGainMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_gain_map: cannot open " + path);
    out << serialize_gain_map(map);
}

ChannelGainMap load_gain_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_gain_map: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gain_map(buf.str());
}

}  // namespace rmplan
