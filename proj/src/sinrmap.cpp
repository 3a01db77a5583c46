// SPDX-License-Identifier: Apache-2.0
#include "rmplan/sinrmap.hpp"

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
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

json grid_header(const GridSpec& g) {
    // Files record the first cell center, not the box corner.
    const Vec3 first = g.center({0, 0, 0});
    json j;
    j["origin"] = {first.x, first.y, first.z};
    if (g.delta.x == g.delta.y && g.delta.x == g.delta.z)
        j["delta"] = g.delta.x;
    else
        j["delta"] = {g.delta.x, g.delta.y, g.delta.z};
    j["dims"] = {g.nx, g.ny, g.nz};
    return j;
}

GridSpec parse_grid_header(const json& j) {
    GridSpec g;
    const auto& d = j.at("delta");
    if (d.is_array())
        g.delta = {d.at(0).get<double>(), d.at(1).get<double>(), d.at(2).get<double>()};
    else
        g.delta = {d.get<double>(), d.get<double>(), d.get<double>()};
    const auto& o = j.at("origin");
    g.origin = {o.at(0).get<double>() - g.delta.x / 2.0, o.at(1).get<double>() - g.delta.y / 2.0,
                o.at(2).get<double>() - g.delta.z / 2.0};
    const auto& dims = j.at("dims");
    g.nx = dims.at(0).get<int>();
    g.ny = dims.at(1).get<int>();
    g.nz = dims.at(2).get<int>();
    if (g.nx < 0 || g.ny < 0 || g.nz < 0) throw std::runtime_error("map header: negative dims");
    return g;
}

void check_version_kind(const json& j, const char* kind, const char* who) {
    if (!j.contains("version") || j["version"].get<int>() != kMapFormatVersion)
        throw std::runtime_error(std::string(who) + ": unsupported version");
    if (j.at("kind").get<std::string>() != kind)
        throw std::runtime_error(std::string(who) + ": wrong map kind");
}

}  // namespace

SinrMap build_sinr_map(const std::vector<ChannelGainMap>& gain_maps,
                       const std::vector<double>& loads, const ChannelParams& params,
                       const GridSpec& grid, Exec exec) {
    const int m_count = static_cast<int>(gain_maps.size());
    if (static_cast<int>(loads.size()) != m_count)
        throw std::invalid_argument("build_sinr_map: loads length must match gain_maps");
    for (double l : loads)
        if (!(l >= 0.0 && l <= 1.0))
            throw std::invalid_argument("build_sinr_map: load outside [0,1]");
    for (const ChannelGainMap& gm : gain_maps)
        if (!gm.empty() && std::abs(gm.delta_d - grid.delta.x) > 1e-9)
            throw std::invalid_argument("build_sinr_map: gain map spacing differs from grid");

    const double p_lin = std::pow(10.0, params.tx_power_dbm / 10.0);
    const double noise_lin = std::pow(10.0, params.noise_power_dbm / 10.0);
    const double denom_floor = noise_lin * (1.0 - 1e-12);

    SinrMap out;
    out.grid = grid;
    const std::size_t n = grid.size();
    out.sinr_db.resize(n);
    out.assoc.resize(n);

    const auto eval_cell = [&](std::size_t f) {
        const Vec3 u = grid.center(grid.unflat(f));
        double rx[64];
        double interference = 0.0;
        for (int m = 0; m < m_count; ++m) {
            const double h = lookup_gain(gain_maps[m], u);
            rx[m] = p_lin * h * h;
            interference += loads[m] * rx[m];
        }
        const double sigma_tilde = noise_lin + interference;
        double best = -1.0;
        int best_id = 0;
        for (int m = 0; m < m_count; ++m) {
            if (rx[m] <= 0.0) continue;
            const double denom = std::max(sigma_tilde - loads[m] * rx[m], denom_floor);
            const double ratio = rx[m] / denom;
            if (ratio > best) {
                best = ratio;
                best_id = gain_maps[m].gbs_id;
            }
        }
        out.sinr_db[f] = best > 0.0 ? 10.0 * std::log10(best) : kNegInf;
        out.assoc[f] = best > 0.0 ? best_id : 0;
    };

    if (m_count > 64) throw std::invalid_argument("build_sinr_map: more than 64 GBS unsupported");
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long f = 0; f < static_cast<long long>(n); ++f)
            eval_cell(static_cast<std::size_t>(f));
    } else {
        for (std::size_t f = 0; f < n; ++f) eval_cell(f);
    }
    return out;
}

FeasibleMap build_feasible_map(const SinrMap& map, double gamma_t_db) {
    FeasibleMap out;
    out.grid = map.grid;
    out.gamma_t_db = gamma_t_db;
    out.feasible.resize(map.sinr_db.size());
    for (std::size_t f = 0; f < map.sinr_db.size(); ++f)
        out.feasible[f] = map.sinr_db[f] >= gamma_t_db ? 1 : 0;
    return out;
}

QuantizedFeasibleMap quantize_feasible_map(const FeasibleMap& map, int kappa_xy, int kappa_z) {
    if (kappa_xy < 1 || kappa_z < 1 || kappa_xy % 2 == 0 || kappa_z % 2 == 0)
        throw std::invalid_argument("quantize_feasible_map: ratios must be odd and positive");
    if (kappa_xy < kappa_z)
        throw std::invalid_argument("quantize_feasible_map: kappa_xy must be >= kappa_z");
    const GridSpec& g = map.grid;
    if (g.nx % kappa_xy != 0 || g.ny % kappa_xy != 0 || g.nz % kappa_z != 0)
        throw std::invalid_argument("quantize_feasible_map: dims not divisible by ratios");

    QuantizedFeasibleMap out;
    out.kappa_xy = kappa_xy;
    out.kappa_z = kappa_z;
    out.gamma_t_db = map.gamma_t_db;
    out.grid.origin = g.origin;
    out.grid.delta = {g.delta.x * kappa_xy, g.delta.y * kappa_xy, g.delta.z * kappa_z};
    out.grid.nx = g.nx / kappa_xy;
    out.grid.ny = g.ny / kappa_xy;
    out.grid.nz = g.nz / kappa_z;
    out.feasible.resize(out.grid.size());

    for (int k = 0; k < out.grid.nz; ++k)
        for (int j = 0; j < out.grid.ny; ++j)
            for (int i = 0; i < out.grid.nx; ++i) {
                std::uint8_t all = 1;
                for (int dk = 0; dk < kappa_z && all; ++dk)
                    for (int dj = 0; dj < kappa_xy && all; ++dj)
                        for (int di = 0; di < kappa_xy && all; ++di)
                            all = map.feasible[g.flat(
                                {i * kappa_xy + di, j * kappa_xy + dj, k * kappa_z + dk})];
                out.feasible[out.grid.flat({i, j, k})] = all;
            }
    return out;
}

std::string serialize_sinr_map(const SinrMap& map) {
    json j;
    j["version"] = kMapFormatVersion;
    j["kind"] = "sinr";
    const json header = grid_header(map.grid);
    for (const auto& [key, val] : header.items()) j[key] = val;
    j["basis"] = map.basis;
    json vals = json::array();
    for (double s : map.sinr_db) {
        if (std::isinf(s))
            vals.push_back(nullptr);
        else
            vals.push_back(s);
    }
    j["sinr_db"] = std::move(vals);
    j["assoc"] = map.assoc;
    return j.dump() + "\n";
}

SinrMap parse_sinr_map(const std::string& text) {
    json j = json::parse(text);
    check_version_kind(j, "sinr", "parse_sinr_map");
    SinrMap map;
    map.grid = parse_grid_header(j);
    map.basis = j.at("basis").get<std::string>();
    const auto& vals = j.at("sinr_db");
    const auto& assoc = j.at("assoc");
    if (vals.size() != map.grid.size() || assoc.size() != map.grid.size())
        throw std::runtime_error("parse_sinr_map: dims/data mismatch");
    map.sinr_db.reserve(vals.size());
    for (const auto& v : vals) map.sinr_db.push_back(v.is_null() ? kNegInf : v.get<double>());
    map.assoc.reserve(assoc.size());
    for (const auto& a : assoc) map.assoc.push_back(a.get<int>());
    return map;
}

void save_sinr_map(const SinrMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_sinr_map: cannot open " + path);
    out << serialize_sinr_map(map);
}

SinrMap load_sinr_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_sinr_map: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sinr_map(buf.str());
}

std::string serialize_feasible_map(const FeasibleMap& map) {
    json j;
    j["version"] = kMapFormatVersion;
    j["kind"] = "feasible";
    const json header = grid_header(map.grid);
    for (const auto& [key, val] : header.items()) j[key] = val;
    j["gamma_t_db"] = map.gamma_t_db;
    j["feasible"] = map.feasible;
    return j.dump() + "\n";
}

FeasibleMap parse_feasible_map(const std::string& text) {
    json j = json::parse(text);
    check_version_kind(j, "feasible", "parse_feasible_map");
    if (j.contains("kappa_xy")) throw std::runtime_error("parse_feasible_map: map is quantized");
    FeasibleMap map;
    map.grid = parse_grid_header(j);
    map.gamma_t_db = j.at("gamma_t_db").get<double>();
    const auto& vals = j.at("feasible");
    if (vals.size() != map.grid.size())
        throw std::runtime_error("parse_feasible_map: dims/data mismatch");
    for (const auto& v : vals) map.feasible.push_back(v.get<int>() ? 1 : 0);
    return map;
}

std::string serialize_quantized_map(const QuantizedFeasibleMap& map) {
    json j;
    j["version"] = kMapFormatVersion;
    j["kind"] = "feasible";
    const json header = grid_header(map.grid);
    for (const auto& [key, val] : header.items()) j[key] = val;
    j["kappa_xy"] = map.kappa_xy;
    j["kappa_z"] = map.kappa_z;
    j["gamma_t_db"] = map.gamma_t_db;
    j["feasible"] = map.feasible;
    return j.dump() + "\n";
}

QuantizedFeasibleMap parse_quantized_map(const std::string& text) {
    json j = json::parse(text);
    check_version_kind(j, "feasible", "parse_quantized_map");
    QuantizedFeasibleMap map;
    map.grid = parse_grid_header(j);
    map.kappa_xy = j.at("kappa_xy").get<int>();
    map.kappa_z = j.at("kappa_z").get<int>();
    map.gamma_t_db = j.at("gamma_t_db").get<double>();
    const auto& vals = j.at("feasible");
    if (vals.size() != map.grid.size())
        throw std::runtime_error("parse_quantized_map: dims/data mismatch");
    for (const auto& v : vals) map.feasible.push_back(v.get<int>() ? 1 : 0);
    return map;
}

}  // namespace rmplan
