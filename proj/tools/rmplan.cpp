// SPDX-License-Identifier: Apache-2.0
// Command-line front end: scene generation, map building, path planning,
// parameter sweeps, and artifact inspection. All outputs are JSON/CSV files.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmplan/eval.hpp"

using namespace rmplan;

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

Vec3 parse_vec3(const std::string& s) {
    Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("expected \"x,y,z\", got \"" + s + "\"");
    return v;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

ModeSpec parse_mode(const std::string& s) {
    ModeSpec m;
    if (s == "optimal") return m;
    if (s.rfind("quantized:", 0) == 0) {
        m.mode = PlanMode::Quantized;
        const auto parts = split(s.substr(10), 'x');
        if (parts.size() != 2) throw CLI::ValidationError("expected quantized:KXYxKZ, got " + s);
        m.kappa_xy = std::stoi(parts[0]);
        m.kappa_z = std::stoi(parts[1]);
        return m;
    }
    if (s.rfind("outage:", 0) == 0) {
        m.mode = PlanMode::OutageTolerant;
        m.outage_tolerance_m = std::stod(s.substr(7));
        return m;
    }
    throw CLI::ValidationError("unknown mode \"" + s + "\"");
}

struct ChannelFlags {
    double freq_ghz = 2.0;
    double tx_dbm = 24.0103;
    double noise_dbm = ChannelParams{}.noise_power_dbm;
    std::string antenna = "iso";
    int elements = 8;
    double tilt_deg = -10.0;
    double spacing = 0.5;

    void attach(CLI::App* cmd) {
        cmd->add_option("--freq-ghz", freq_ghz, "Carrier frequency [GHz]");
        cmd->add_option("--tx-dbm", tx_dbm, "Transmit power per resource block [dBm]");
        cmd->add_option("--noise-dbm", noise_dbm, "Noise power [dBm]");
        cmd->add_option("--antenna", antenna, "Antenna model: iso or ula")
            ->check(CLI::IsMember({"iso", "ula"}));
        cmd->add_option("--elements", elements, "ULA element count");
        cmd->add_option("--tilt", tilt_deg, "ULA tilt [deg], negative = down");
        cmd->add_option("--spacing", spacing, "ULA element spacing [wavelengths]");
    }
    ChannelParams params() const { return {freq_ghz, tx_dbm, noise_dbm}; }
    AntennaModel antenna_model() const {
        AntennaModel a;
        a.kind = antenna == "ula" ? AntennaKind::Ula : AntennaKind::Isotropic;
        a.n_elements = elements;
        a.tilt_deg = tilt_deg;
        a.element_spacing = spacing;
        return a;
    }
};

double resolve_epsilon(const std::string& flag, const ChannelParams& params) {
    if (flag == "auto") {
        const double eps = default_epsilon_db(params);
        std::fprintf(stderr, "epsilon auto: %.6f dB\n", eps);
        return eps;
    }
    return std::stod(flag);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

int cmd_gen_scene(const SceneConfig& cfg, std::uint64_t seed, const std::string& out) {
    const Scene scene = generate_scene(cfg, seed);
    save_scene(scene, out);
    std::printf("wrote %s: %zu GBS, %zu obstacles, seed %llu\n", out.c_str(),
                scene.gbs_list.size(), scene.obstacles.size(),
                static_cast<unsigned long long>(seed));
    return 0;
}

int cmd_build_maps(const std::string& scene_file, double delta, const std::string& epsilon_flag,
                   const ChannelFlags& ch, const std::string& basis_str, double lmax,
                   const std::string& out_dir) {
    const Scene scene = load_scene(scene_file);
    const ChannelParams params = ch.params();
    const AntennaModel antenna = ch.antenna_model();
    const PlanningBasis basis = planning_basis_from_string(basis_str);
    const double epsilon = resolve_epsilon(epsilon_flag, params);
    const GridSpec grid = grid_for_region(scene.region, delta);

    LosOverride ov = LosOverride::Auto;
    if (basis == PlanningBasis::AllLos) ov = LosOverride::ForceLos;
    if (basis == PlanningBasis::AllNlos) ov = LosOverride::ForceNlos;

    std::vector<double> loads;
    for (const Gbs& g : scene.gbs_list) {
        switch (basis) {
            case PlanningBasis::WorstCaseLoad: loads.push_back(lmax); break;
            case PlanningBasis::ZeroLoad: loads.push_back(0.0); break;
            default: loads.push_back(g.loading_factor); break;
        }
    }

    fs::create_directories(out_dir);
    std::vector<ChannelGainMap> maps;
    for (const Gbs& g : scene.gbs_list) {
        maps.push_back(build_gain_map(scene, params, antenna, g, grid, epsilon, ov, Exec::Parallel));
        const std::string file = out_dir + "/gain_m" + std::to_string(g.id) + ".json";
        save_gain_map(maps.back(), file);
    }
    SinrMap sinr = build_sinr_map(maps, loads, params, grid, Exec::Parallel);
    sinr.basis = basis_str;
    save_sinr_map(sinr, out_dir + "/sinr.json");
    std::printf("wrote %zu gain maps and sinr.json (%dx%dx%d, basis %s) to %s\n", maps.size(),
                grid.nx, grid.ny, grid.nz, basis_str.c_str(), out_dir.c_str());
    return 0;
}

int cmd_plan(const std::string& actual_file, const std::string& planning_file,
             const MissionSpec& mission, const std::string& out) {
    const SinrMap actual = load_sinr_map(actual_file);
    const SinrMap planning =
        planning_file.empty() ? actual : load_sinr_map(planning_file);
    const Path path = plan(mission, actual, planning);
    save_path(path, mission, out);
    if (!path.feasible) {
        std::fprintf(stderr, "no path: %s\n", to_string(path.status).c_str());
        return 2;
    }
    std::printf("wrote %s: length %.3f m, duration %.3f s, outage %.3f m\n", out.c_str(),
                path.length_m, path.duration_s, path.outage_m);
    return 0;
}

int cmd_sweep(const std::string& scene_file, const ChannelFlags& ch,
              const std::string& epsilon_flag, SweepConfig cfg,
              const std::vector<std::string>& mode_strs,
              const std::vector<std::string>& basis_strs, const std::string& out) {
    const Scene scene = load_scene(scene_file);
    const ChannelParams params = ch.params();
    cfg.epsilon_auto = epsilon_flag == "auto";
    if (!cfg.epsilon_auto) cfg.epsilon_db = std::stod(epsilon_flag);
    for (const std::string& m : mode_strs) cfg.modes.push_back(parse_mode(m));
    for (const std::string& b : basis_strs) cfg.bases.push_back(planning_basis_from_string(b));
    const SweepResult result = sweep(scene, params, ch.antenna_model(), cfg);
    write_file(out, sweep_to_csv(result));
    std::printf("wrote %s: %zu rows\n", out.c_str(), result.rows.size());
    return 0;
}

int cmd_inspect(const std::string& file, const std::vector<double>& gammas) {
    const json j = json::parse(read_file(file));
    if (j.contains("region")) {
        const Scene scene = scene_from_json(j.dump());
        std::printf("scene: %zu GBS, %zu obstacles, seed %llu, L=%g, H=[%g,%g], h_gbs=%g\n",
                    scene.gbs_list.size(), scene.obstacles.size(),
                    static_cast<unsigned long long>(scene.seed), scene.region.edge_length,
                    scene.region.h_min, scene.region.h_max, scene.region.h_gbs);
        return 0;
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gain") {
        const ChannelGainMap map = parse_gain_map(j.dump());
        std::size_t stored = 0;
        double lo = 0.0, hi = 0.0;
        bool any = false;
        for (double g : map.gain_db) {
            if (std::isnan(g)) continue;
            ++stored;
            lo = any ? std::min(lo, g) : g;
            hi = any ? std::max(hi, g) : g;
            any = true;
        }
        std::printf("gain map: gbs %d, dims %dx%dx%d, delta %g m, epsilon %.3f dB\n", map.gbs_id,
                    map.nx, map.ny, map.nz, map.delta_d, map.epsilon_db);
        if (any)
            std::printf("  stored cells %zu, gain range [%.3f, %.3f] dB\n", stored, lo, hi);
        else
            std::printf("  empty map\n");
        return 0;
    }
    if (kind == "sinr") {
        const SinrMap map = parse_sinr_map(j.dump());
        double lo = 0.0, hi = 0.0;
        bool any = false;
        std::size_t covered = 0;
        for (double s : map.sinr_db) {
            if (std::isinf(s)) continue;
            ++covered;
            lo = any ? std::min(lo, s) : s;
            hi = any ? std::max(hi, s) : s;
            any = true;
        }
        std::printf("sinr map: dims %dx%dx%d, basis %s, covered cells %zu/%zu\n", map.grid.nx,
                    map.grid.ny, map.grid.nz, map.basis.c_str(), covered, map.grid.size());
        if (any) std::printf("  sinr range [%.3f, %.3f] dB\n", lo, hi);
        for (double g : gammas) {
            std::size_t n = 0;
            for (double s : map.sinr_db)
                if (s >= g) ++n;
            std::printf("  feasible cells at %.3f dB: %zu\n", g, n);
        }
        return 0;
    }
    if (kind == "feasible") {
        const json& vals = j.at("feasible");
        std::size_t n = 0;
        for (const auto& v : vals) n += v.get<int>() ? 1 : 0;
        std::printf("feasible map: gamma %.3f dB, %zu/%zu cells feasible\n",
                    j.at("gamma_t_db").get<double>(), n, vals.size());
        return 0;
    }
    throw std::runtime_error("inspect: unrecognized file kind \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radio-map construction and SINR-constrained 3D path planning"};
    app.require_subcommand(1);

    // gen-scene
    auto* gen = app.add_subcommand("gen-scene", "Generate a random scene file");
    SceneConfig scfg;
    scfg.n_gbs = 6;
    scfg.n_obstacles = 30;
    scfg.region = {630.0, 90.0, 130.0, 10.0};
    std::uint64_t seed = 1;
    std::string gen_out, loads_str;
    gen->add_option("--m", scfg.n_gbs, "Number of GBS");
    gen->add_option("--obstacles", scfg.n_obstacles, "Number of obstacles");
    gen->add_option("--edge", scfg.region.edge_length, "Region edge length [m]");
    gen->add_option("--h-min", scfg.region.h_min, "Minimum UAV altitude [m]");
    gen->add_option("--h-max", scfg.region.h_max, "Maximum UAV altitude [m]");
    gen->add_option("--h-gbs", scfg.region.h_gbs, "GBS antenna height [m]");
    gen->add_option("--size-min", scfg.obstacle_size_min, "Obstacle side minimum [m]");
    gen->add_option("--size-max", scfg.obstacle_size_max, "Obstacle side maximum [m]");
    gen->add_option("--height-mean", scfg.obstacle_height_mean, "Obstacle height mean [m]");
    gen->add_option("--loads", loads_str, "Explicit loads, comma-separated (default: random)");
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output scene file")->required();

    // build-maps
    auto* build = app.add_subcommand("build-maps", "Build gain maps and the SINR map");
    std::string scene_file, epsilon_flag = "auto", basis_str = "actual", out_dir;
    double delta = 10.0, lmax = 1.0;
    ChannelFlags build_ch;
    build->add_option("--scene", scene_file, "Scene file")->required();
    build->add_option("--delta", delta, "Grid spacing [m]");
    build->add_option("--epsilon", epsilon_flag, "Gain threshold [dB] or \"auto\"");
    build->add_option("--basis", basis_str,
                      "actual, worst-case-load, zero-load, all-los, all-nlos");
    build->add_option("--lmax", lmax, "Load used by worst-case-load basis");
    build_ch.attach(build);
    build->add_option("--out-dir", out_dir, "Output directory")->required();

    // plan
    auto* planc = app.add_subcommand("plan", "Plan a path on built maps");
    std::string actual_file, planning_file, start_str, goal_str, mode_str = "optimal", plan_out;
    MissionSpec mission;
    planc->add_option("--actual", actual_file, "Actual-basis SINR map file")->required();
    planc->add_option("--planning", planning_file, "Planning-basis SINR map (default: actual)");
    planc->add_option("--start", start_str, "Start position \"x,y,z\" [m]")->required();
    planc->add_option("--goal", goal_str, "Goal position \"x,y,z\" [m]")->required();
    planc->add_option("--gamma-db", mission.gamma_t_db, "Expected-SINR target [dB]")->required();
    planc->add_option("--mode", mode_str, "optimal, quantized, outage");
    planc->add_option("--kxy", mission.kappa_xy, "Horizontal quantization ratio (odd)");
    planc->add_option("--kz", mission.kappa_z, "Vertical quantization ratio (odd)");
    planc->add_option("--ot", mission.outage_tolerance_m, "Outage tolerance per bridge [m]");
    planc->add_option("--speed", mission.speed, "UAV speed [m/s]");
    planc->add_option("--out", plan_out, "Output path file")->required();

    // sweep
    auto* swp = app.add_subcommand("sweep", "Plan across SINR targets, modes, and bases");
    std::string sweep_scene, sweep_eps = "auto", sweep_out;
    std::string sweep_start = "5,5,95", sweep_goal = "625,625,125";
    std::vector<std::string> mode_strs{"optimal"}, basis_strs{"actual"};
    std::string gammas_str;
    double gamma_from = 0.0, gamma_to = 0.0, gamma_step = 1.0;
    SweepConfig swcfg;
    bool no_runtime = false;
    ChannelFlags sweep_ch;
    swp->add_option("--scene", sweep_scene, "Scene file")->required();
    swp->add_option("--delta", swcfg.delta_d, "Grid spacing [m]");
    swp->add_option("--epsilon", sweep_eps, "Gain threshold [dB] or \"auto\"");
    auto* gfrom = swp->add_option("--gamma-from", gamma_from, "First SINR target [dB]");
    swp->add_option("--gamma-to", gamma_to, "Last SINR target [dB]");
    swp->add_option("--gamma-step", gamma_step, "SINR target step [dB]");
    swp->add_option("--gammas", gammas_str, "Explicit targets, comma-separated [dB]");
    swp->add_option("--modes", mode_strs,
                    "Modes: optimal, quantized:KXYxKZ, outage:OT (repeatable)");
    swp->add_option("--bases", basis_strs, "Planning bases (repeatable)");
    swp->add_option("--start", sweep_start, "Start position \"x,y,z\" [m]");
    swp->add_option("--goal", sweep_goal, "Goal position \"x,y,z\" [m]");
    swp->add_option("--speed", swcfg.speed, "UAV speed [m/s]");
    swp->add_option("--lmax", swcfg.worst_case_load, "Load used by worst-case-load basis");
    swp->add_flag("--no-runtime", no_runtime, "Write runtime_s as 0 for reproducible bytes");
    sweep_ch.attach(swp);
    swp->add_option("--out", sweep_out, "Output CSV file")->required();

    // inspect
    auto* insp = app.add_subcommand("inspect", "Print statistics of a scene or map file");
    std::string inspect_file;
    std::vector<double> inspect_gammas;
    insp->add_option("--file", inspect_file, "Scene or map JSON file")->required();
    insp->add_option("--gamma-db", inspect_gammas, "Report feasible-cell counts at these targets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems exit 1; --help and friends exit 0.
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            if (!loads_str.empty()) scfg.loads = parse_doubles(loads_str);
            return cmd_gen_scene(scfg, seed, gen_out);
        }
        if (build->parsed())
            return cmd_build_maps(scene_file, delta, epsilon_flag, build_ch, basis_str, lmax,
                                  out_dir);
        if (planc->parsed()) {
            mission.start = parse_vec3(start_str);
            mission.goal = parse_vec3(goal_str);
            if (mode_str == "optimal")
                mission.mode = PlanMode::Optimal;
            else if (mode_str == "quantized")
                mission.mode = PlanMode::Quantized;
            else if (mode_str == "outage")
                mission.mode = PlanMode::OutageTolerant;
            else
                throw std::runtime_error("plan: unknown mode \"" + mode_str + "\"");
            return cmd_plan(actual_file, planning_file, mission, plan_out);
        }
        if (swp->parsed()) {
            swcfg.start = parse_vec3(sweep_start);
            swcfg.goal = parse_vec3(sweep_goal);
            swcfg.record_runtime = !no_runtime;
            if (!gammas_str.empty()) {
                swcfg.gammas = parse_doubles(gammas_str);
            } else if (gfrom->count() > 0) {
                if (gamma_step <= 0.0) throw std::runtime_error("sweep: gamma-step must be > 0");
                for (double g = gamma_from; g <= gamma_to + 1e-12; g += gamma_step)
                    swcfg.gammas.push_back(g);
            } else {
                throw std::runtime_error("sweep: give --gammas or --gamma-from/--gamma-to");
            }
            return cmd_sweep(sweep_scene, sweep_ch, sweep_eps, swcfg, mode_strs, basis_strs,
                             sweep_out);
        }
        if (insp->parsed()) return cmd_inspect(inspect_file, inspect_gammas);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
