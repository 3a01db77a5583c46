// SPDX-License-Identifier: Apache-2.0
// Drives the installed binary end to end through a scratch directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "rmplan/eval.hpp"

using namespace rmplan;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = "cli_scratch";

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    const fs::path out_file = kTmp / "stdout.txt";
    const fs::path err_file = kTmp / "stderr.txt";
    const std::string cmd = std::string("\"") + RMPLAN_BIN + "\" " + args + " > \"" +
                            out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

std::string vec_arg(const Vec3& p) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g", p.x, p.y, p.z);
    return buf;
}

// Shared scratch state, built once in order by the first cases.
struct Workspace {
    fs::path scene = kTmp / "scene.json";
    fs::path maps = kTmp / "maps";
    fs::path zero_maps = kTmp / "maps_zero";
    Vec3 start;
    Vec3 goal;
    double gamma_low = 0.0;
};

Workspace& ws() {
    static Workspace w;
    return w;
}

}  // namespace

TEST_CASE("scene generation is reproducible and validates flags") {
    fs::remove_all(kTmp);
    fs::create_directories(kTmp);

    const std::string flags =
        "gen-scene --m 3 --obstacles 5 --edge 120 --h-min 90 --h-max 130 "
        "--loads 0.3,0.9,0.1 --seed 11 --out ";
    const RunResult first = run(flags + "\"" + ws().scene.string() + "\"");
    REQUIRE(first.code == 0);
    CHECK(first.out.find("wrote") != std::string::npos);

    const fs::path again = kTmp / "scene_again.json";
    REQUIRE(run(flags + "\"" + again.string() + "\"").code == 0);
    CHECK(slurp(ws().scene) == slurp(again));

    const Scene scene = load_scene(ws().scene.string());
    CHECK(scene.gbs_list.size() == 3);
    CHECK(scene.obstacles.size() == 5);
    CHECK(scene.gbs_list[1].loading_factor == 0.9);

    // No obstacles means nothing can block line of sight.
    const fs::path open_scene = kTmp / "scene_open.json";
    REQUIRE(run("gen-scene --m 2 --obstacles 0 --edge 120 --seed 4 --out \"" +
                open_scene.string() + "\"")
                .code == 0);
    CHECK(load_scene(open_scene.string()).obstacles.empty());

    CHECK(run("gen-scene --m 3").code == 1);          // missing required --out
    CHECK(run("gen-scene --nope 1 --out x").code == 1);
    CHECK(run("--help").code == 0);
}

TEST_CASE("map building writes one gain map per transmitter plus the sinr map") {
    const RunResult r = run("build-maps --scene \"" + ws().scene.string() +
                            "\" --delta 10 --epsilon auto --out-dir \"" + ws().maps.string() +
                            "\"");
    REQUIRE(r.code == 0);
    CHECK(r.err.find("epsilon auto: -65.7") != std::string::npos);

    for (int id = 1; id <= 3; ++id)
        CHECK(fs::exists(ws().maps / ("gain_m" + std::to_string(id) + ".json")));
    REQUIRE(fs::exists(ws().maps / "sinr.json"));

    const SinrMap sinr = load_sinr_map((ws().maps / "sinr.json").string());
    CHECK(sinr.grid.nx == 12);
    CHECK(sinr.grid.ny == 12);
    CHECK(sinr.grid.nz == 4);
    CHECK(sinr.basis == "actual");

    // Matching in-process build, byte for byte on the stored values.
    const Scene scene = load_scene(ws().scene.string());
    const ChannelParams params;
    const AntennaModel antenna;
    const GridSpec grid = grid_for_region(scene.region, 10.0);
    std::vector<ChannelGainMap> maps;
    std::vector<double> loads;
    for (const Gbs& g : scene.gbs_list) {
        maps.push_back(build_gain_map(scene, params, antenna, g, grid,
                                      default_epsilon_db(params)));
        loads.push_back(g.loading_factor);
    }
    const SinrMap direct = build_sinr_map(maps, loads, params, grid);
    REQUIRE(direct.sinr_db.size() == sinr.sinr_db.size());
    for (std::size_t f = 0; f < direct.sinr_db.size(); ++f)
        CHECK(direct.sinr_db[f] == sinr.sinr_db[f]);

    // Endpoints for the planning cases: far-apart connected feasible cells.
    double min_db = 1e300;
    for (double v : sinr.sinr_db)
        if (std::isfinite(v) && v < min_db) min_db = v;
    ws().gamma_low = min_db - 1.0;
    const FeasibleMap fmap = build_feasible_map(sinr, ws().gamma_low);
    const GridGraph g = build_graph(fmap);
    REQUIRE(g.n_vertices() > 1);
    REQUIRE(check_feasibility(g, g.vertex_cell.front(), g.vertex_cell.back()));
    ws().start = grid.center(g.vertex_cell.front());
    ws().goal = grid.center(g.vertex_cell.back());

    REQUIRE(run("build-maps --scene \"" + ws().scene.string() +
                "\" --delta 10 --basis zero-load --out-dir \"" + ws().zero_maps.string() + "\"")
                .code == 0);
    CHECK(load_sinr_map((ws().zero_maps / "sinr.json").string()).basis == "zero-load");

    const RunResult missing =
        run("build-maps --scene \"" + (kTmp / "no_such.json").string() + "\" --out-dir \"" +
            (kTmp / "x").string() + "\"");
    CHECK(missing.code == 1);
    CHECK(missing.err.find("error:") != std::string::npos);
}

TEST_CASE("planning emits a path file and distinct failure exit codes") {
    const std::string sinr_file = (ws().maps / "sinr.json").string();
    const fs::path out = kTmp / "path.json";
    char gamma[32];
    std::snprintf(gamma, sizeof(gamma), "%.10g", ws().gamma_low);

    const RunResult ok = run("plan --actual \"" + sinr_file + "\" --start " +
                             vec_arg(ws().start) + " --goal " + vec_arg(ws().goal) +
                             " --gamma-db " + gamma + " --out \"" + out.string() + "\"");
    REQUIRE(ok.code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("status").get<std::string>() == "ok");
    CHECK(j.at("feasible").get<bool>());
    const double optimal_len = j.at("length_m").get<double>();
    CHECK(optimal_len > 0.0);
    CHECK(j.at("outage_m").get<double>() == 0.0);
    CHECK(j.at("mission").at("mode").get<std::string>() == "optimal");

    // Same endpoints, coarser lattice: never shorter.
    const fs::path qout = kTmp / "path_q.json";
    REQUIRE(run("plan --actual \"" + sinr_file + "\" --start " + vec_arg(ws().start) +
                " --goal " + vec_arg(ws().goal) + " --gamma-db " + gamma +
                " --mode quantized --kxy 3 --kz 1 --out \"" + qout.string() + "\"")
                .code == 0);
    const auto jq = nlohmann::json::parse(slurp(qout));
    CHECK(jq.at("mission").at("mode").get<std::string>() == "quantized:3x1");
    CHECK(jq.at("length_m").get<double>() >= optimal_len - 1e-9);

    // Unreachable target still writes machine-readable output, exit 2.
    const fs::path nout = kTmp / "path_none.json";
    const RunResult infeasible =
        run("plan --actual \"" + sinr_file + "\" --start " + vec_arg(ws().start) + " --goal " +
            vec_arg(ws().goal) + " --gamma-db 10000 --out \"" + nout.string() + "\"");
    CHECK(infeasible.code == 2);
    CHECK(infeasible.err.find("no path") != std::string::npos);
    const auto jn = nlohmann::json::parse(slurp(nout));
    CHECK(!jn.at("feasible").get<bool>());
    CHECK(jn.at("waypoints").empty());

    // Off-lattice endpoints are infeasible plans, not I/O errors.
    const Vec3 off{ws().start.x + 1.0, ws().start.y, ws().start.z};
    CHECK(run("plan --actual \"" + sinr_file + "\" --start " + vec_arg(off) + " --goal " +
              vec_arg(ws().goal) + " --gamma-db " + gamma + " --out \"" + nout.string() + "\"")
              .code == 2);

    // Bad input file is an I/O error.
    CHECK(run("plan --actual \"" + (kTmp / "no_such.json").string() + "\" --start 5,5,95 " +
              "--goal 15,5,95 --gamma-db 0 --out \"" + nout.string() + "\"")
              .code == 1);
}

TEST_CASE("planning against a separate planning basis measures outage on the actual map") {
    const std::string actual_file = (ws().maps / "sinr.json").string();
    const std::string zero_file = (ws().zero_maps / "sinr.json").string();
    const fs::path out = kTmp / "path_zero.json";
    char gamma[32];
    std::snprintf(gamma, sizeof(gamma), "%.10g", ws().gamma_low);

    const RunResult r = run("plan --actual \"" + actual_file + "\" --planning \"" + zero_file +
                            "\" --start " + vec_arg(ws().start) + " --goal " +
                            vec_arg(ws().goal) + " --gamma-db " + gamma + " --out \"" +
                            out.string() + "\"");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("mission").at("planning_basis").get<std::string>() == "actual");
    CHECK(j.at("outage_m").get<double>() >= 0.0);
}

TEST_CASE("sweep writes a stable csv") {
    const fs::path out = kTmp / "sweep.csv";
    char gamma[32];
    std::snprintf(gamma, sizeof(gamma), "%.10g", ws().gamma_low);
    const std::string cmd = "sweep --scene \"" + ws().scene.string() + "\" --delta 10 --gammas " +
                            gamma + ",10000 --modes optimal quantized:3x1 --bases actual "
                            "--start " + vec_arg(ws().start) + " --goal " + vec_arg(ws().goal) +
                            " --no-runtime --out \"" + out.string() + "\"";
    REQUIRE(run(cmd).code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("gamma_t_db,mode,basis,feasible,length_m,outage_fraction,runtime_s\n", 0) ==
          0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 2 gammas x 2 modes

    const fs::path again = kTmp / "sweep_again.csv";
    REQUIRE(run(cmd.substr(0, cmd.rfind("--out")) + "--out \"" + again.string() + "\"").code ==
            0);
    CHECK(slurp(again) == csv);

    CHECK(run("sweep --scene \"" + ws().scene.string() + "\" --out \"" + out.string() + "\"")
              .code == 1);  // no targets given
}

TEST_CASE("inspect summarizes scenes and maps") {
    const RunResult scene = run("inspect --file \"" + ws().scene.string() + "\"");
    REQUIRE(scene.code == 0);
    CHECK(scene.out.find("scene: 3 GBS, 5 obstacles") != std::string::npos);

    const RunResult sinr =
        run("inspect --file \"" + (ws().maps / "sinr.json").string() + "\" --gamma-db 0 5");
    REQUIRE(sinr.code == 0);
    CHECK(sinr.out.find("sinr map: dims 12x12x4") != std::string::npos);
    CHECK(sinr.out.find("feasible cells at 0.000 dB") != std::string::npos);
    CHECK(sinr.out.find("feasible cells at 5.000 dB") != std::string::npos);

    const RunResult gain =
        run("inspect --file \"" + (ws().maps / "gain_m1.json").string() + "\"");
    REQUIRE(gain.code == 0);

    CHECK(run("inspect --file \"" + (kTmp / "no_such.json").string() + "\"").code == 1);

    fs::remove_all(kTmp);
}
