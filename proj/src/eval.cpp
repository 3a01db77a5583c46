// SPDX-License-Identifier: Apache-2.0
#include "rmplan/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rmplan/rng.hpp"

namespace rmplan {

namespace {

// Exact outage of one segment: split at every cell-boundary crossing, then
// classify each piece by its midpoint cell. Coincident crossings (diagonals
// through cell corners) are merged.
void segment_outage(const Vec3& a, const Vec3& b, const GridSpec& grid,
                    const std::vector<std::uint8_t>& cell_ok, OutageResult& acc) {
    const Vec3 d = b - a;
    const double len = d.norm();
    acc.length_m += len;
    if (len == 0.0) return;

    std::vector<double> ts{0.0, 1.0};
    const double av[3] = {a.x, a.y, a.z};
    const double dv[3] = {d.x, d.y, d.z};
    const double ov[3] = {grid.origin.x, grid.origin.y, grid.origin.z};
    const double sv[3] = {grid.delta.x, grid.delta.y, grid.delta.z};
    for (int ax = 0; ax < 3; ++ax) {
        if (dv[ax] == 0.0) continue;
        const double lo = std::min(av[ax], av[ax] + dv[ax]);
        const double hi = std::max(av[ax], av[ax] + dv[ax]);
        const long long m0 = static_cast<long long>(std::ceil((lo - ov[ax]) / sv[ax]));
        const long long m1 = static_cast<long long>(std::floor((hi - ov[ax]) / sv[ax]));
        for (long long m = m0; m <= m1; ++m) {
            const double t = (ov[ax] + m * sv[ax] - av[ax]) / dv[ax];
            if (t > 0.0 && t < 1.0) ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());

    double prev = ts.front();
    for (std::size_t n = 1; n < ts.size(); ++n) {
        const double t = ts[n];
        if (t - prev < 1e-15) continue;
        const double tm = (prev + t) / 2.0;
        const Vec3 mid = a + d * tm;
        const auto cell = grid.cell_of(mid);
        bool ok = false;
        if (cell) {
            ok = cell_ok[grid.flat(*cell)] != 0;
        } else {
            acc.left_region = true;
        }
        if (!ok) acc.outage_m += (t - prev) * len;
        prev = t;
    }
}

OutageResult polyline_outage(const std::vector<Vec3>& waypoints, const GridSpec& grid,
                             const std::vector<std::uint8_t>& cell_ok) {
    OutageResult res;
    for (std::size_t s = 0; s + 1 < waypoints.size(); ++s)
        segment_outage(waypoints[s], waypoints[s + 1], grid, cell_ok, res);
    res.fraction = res.length_m > 0.0 ? res.outage_m / res.length_m : 0.0;
    return res;
}

double format_or_nan(bool ok, double v) {
    return ok ? v : std::numeric_limits<double>::quiet_NaN();
}

void append_csv_number(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    out += buf;
}

}  // namespace

OutageResult outage_vs_sinr(const std::vector<Vec3>& waypoints, const SinrMap& map,
                            double gamma_t_db) {
    std::vector<std::uint8_t> ok(map.sinr_db.size());
    for (std::size_t f = 0; f < map.sinr_db.size(); ++f)
        ok[f] = map.sinr_db[f] >= gamma_t_db ? 1 : 0;
    return polyline_outage(waypoints, map.grid, ok);
}

OutageResult outage_vs_feasible(const std::vector<Vec3>& waypoints, const FeasibleMap& map) {
    return polyline_outage(waypoints, map.grid, map.feasible);
}

double connectivity_outage(const Path& path, const SinrMap& actual_map, double gamma_t_db) {
    if (path.waypoints.empty()) throw std::invalid_argument("connectivity_outage: empty path");
    return outage_vs_sinr(path.waypoints, actual_map, gamma_t_db).fraction;
}

McEstimate mc_expected_sinr(const std::vector<double>& gains_linear,
                            const std::vector<double>& loads, const ChannelParams& params,
                            int assoc_id, const MonteCarloConfig& cfg) {
    const int m_count = static_cast<int>(gains_linear.size());
    if (loads.size() != gains_linear.size())
        throw std::invalid_argument("mc_expected_sinr: loads/gains size mismatch");
    if (assoc_id < 1 || assoc_id > m_count)
        throw std::invalid_argument("mc_expected_sinr: bad serving index");
    if (cfg.n_samples <= 0) throw std::invalid_argument("mc_expected_sinr: n_samples must be > 0");

    const double p_lin = std::pow(10.0, params.tx_power_dbm / 10.0);
    const double noise_lin = std::pow(10.0, params.noise_power_dbm / 10.0);
    const int a = assoc_id - 1;
    const bool fading = cfg.fading == FadingModel::RayleighUnitPower;

    Rng rng(cfg.seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (long long s = 0; s < cfg.n_samples; ++s) {
        const double sig_fade = fading ? rng.exponential() : 1.0;
        double denom = noise_lin;
        for (int m = 0; m < m_count; ++m) {
            if (m == a) continue;
            if (!rng.bernoulli(loads[m])) continue;
            const double fade = fading ? rng.exponential() : 1.0;
            denom += p_lin * gains_linear[m] * gains_linear[m] * fade;
        }
        const double value = p_lin * gains_linear[a] * gains_linear[a] * sig_fade / denom;
        const double delta = value - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (value - mean);
    }
    McEstimate est;
    est.estimate = mean;
    est.std_error = cfg.n_samples > 1
                        ? std::sqrt(m2 / static_cast<double>(cfg.n_samples - 1) /
                                    static_cast<double>(cfg.n_samples))
                        : 0.0;
    return est;
}

double expected_sinr_closed_form(const std::vector<double>& gains_linear,
                                 const std::vector<double>& loads, const ChannelParams& params,
                                 int assoc_id) {
    const int m_count = static_cast<int>(gains_linear.size());
    if (loads.size() != gains_linear.size())
        throw std::invalid_argument("expected_sinr_closed_form: loads/gains size mismatch");
    if (assoc_id < 1 || assoc_id > m_count)
        throw std::invalid_argument("expected_sinr_closed_form: bad serving index");
    const double p_lin = std::pow(10.0, params.tx_power_dbm / 10.0);
    const double noise_lin = std::pow(10.0, params.noise_power_dbm / 10.0);
    const int a = assoc_id - 1;
    double denom = noise_lin;
    for (int m = 0; m < m_count; ++m) {
        if (m == a) continue;
        denom += loads[m] * p_lin * gains_linear[m] * gains_linear[m];
    }
    return p_lin * gains_linear[a] * gains_linear[a] / denom;
}

SweepResult sweep(const Scene& scene, const ChannelParams& params, const AntennaModel& antenna,
                  const SweepConfig& cfg) {
    const GridSpec grid = grid_for_region(scene.region, cfg.delta_d);
    const double epsilon = cfg.epsilon_auto ? default_epsilon_db(params) : cfg.epsilon_db;
    const int m_count = static_cast<int>(scene.gbs_list.size());

    std::vector<double> actual_loads(m_count);
    for (int m = 0; m < m_count; ++m) actual_loads[m] = scene.gbs_list[m].loading_factor;

    const auto build_set = [&](LosOverride ov) {
        std::vector<ChannelGainMap> maps;
        maps.reserve(m_count);
        for (const Gbs& g : scene.gbs_list)
            maps.push_back(
                build_gain_map(scene, params, antenna, g, grid, epsilon, ov, Exec::Parallel));
        return maps;
    };

    const std::vector<ChannelGainMap> auto_maps = build_set(LosOverride::Auto);
    const SinrMap actual = build_sinr_map(auto_maps, actual_loads, params, grid, Exec::Parallel);

    std::vector<SinrMap> planning(cfg.bases.size());
    for (std::size_t b = 0; b < cfg.bases.size(); ++b) {
        switch (cfg.bases[b]) {
            case PlanningBasis::Actual:
                planning[b] = actual;
                break;
            case PlanningBasis::WorstCaseLoad:
                planning[b] = build_sinr_map(auto_maps,
                                             std::vector<double>(m_count, cfg.worst_case_load),
                                             params, grid, Exec::Parallel);
                break;
            case PlanningBasis::ZeroLoad:
                planning[b] = build_sinr_map(auto_maps, std::vector<double>(m_count, 0.0), params,
                                             grid, Exec::Parallel);
                break;
            case PlanningBasis::AllLos:
                planning[b] = build_sinr_map(build_set(LosOverride::ForceLos), actual_loads,
                                             params, grid, Exec::Parallel);
                break;
            case PlanningBasis::AllNlos:
                planning[b] = build_sinr_map(build_set(LosOverride::ForceNlos), actual_loads,
                                             params, grid, Exec::Parallel);
                break;
        }
        planning[b].basis = to_string(cfg.bases[b]);
    }

    std::vector<double> gammas = cfg.gammas;
    std::sort(gammas.begin(), gammas.end());

    SweepResult result;
    for (double gamma : gammas) {
        for (const ModeSpec& mode : cfg.modes) {
            for (std::size_t b = 0; b < cfg.bases.size(); ++b) {
                MissionSpec mission;
                mission.start = cfg.start;
                mission.goal = cfg.goal;
                mission.speed = cfg.speed;
                mission.gamma_t_db = gamma;
                mission.mode = mode.mode;
                mission.kappa_xy = mode.kappa_xy;
                mission.kappa_z = mode.kappa_z;
                mission.outage_tolerance_m = mode.outage_tolerance_m;
                mission.planning_basis = cfg.bases[b];

                SweepRow row;
                row.gamma_t_db = gamma;
                row.mode = mode_label(mission);
                row.basis = to_string(cfg.bases[b]);
                const auto t0 = std::chrono::steady_clock::now();
                Path path;
                try {
                    path = plan(mission, actual, planning[b]);
                } catch (const std::exception&) {
                    path = Path{};  // recorded as an infeasible row
                }
                const auto t1 = std::chrono::steady_clock::now();
                row.feasible = path.feasible;
                row.length_m = format_or_nan(path.feasible, path.length_m);
                row.outage_fraction = format_or_nan(
                    path.feasible, path.length_m > 0.0 ? path.outage_m / path.length_m : 0.0);
                row.runtime_s =
                    cfg.record_runtime ? std::chrono::duration<double>(t1 - t0).count() : 0.0;
                result.rows.push_back(std::move(row));
            }
        }
    }
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const SweepRow& x, const SweepRow& y) {
                         if (x.gamma_t_db != y.gamma_t_db) return x.gamma_t_db < y.gamma_t_db;
                         if (x.mode != y.mode) return x.mode < y.mode;
                         return x.basis < y.basis;
                     });
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "gamma_t_db,mode,basis,feasible,length_m,outage_fraction,runtime_s\n";
    for (const SweepRow& r : result.rows) {
        append_csv_number(out, r.gamma_t_db);
        out += ',';
        out += r.mode;
        out += ',';
        out += r.basis;
        out += ',';
        out += r.feasible ? '1' : '0';
        out += ',';
        append_csv_number(out, r.length_m);
        out += ',';
        append_csv_number(out, r.outage_fraction);
        out += ',';
        append_csv_number(out, r.runtime_s);
        out += '\n';
    }
    return out;
}

}  // namespace rmplan
