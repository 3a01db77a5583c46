// SPDX-License-Identifier: Apache-2.0
// Times the map-construction kernels in serial and OpenMP mode on a
// full-size scene and checks that both produce identical maps.

#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
static double omp_get_wtime() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
static int omp_get_max_threads() { return 1; }
#endif

#include "rmplan/eval.hpp"

using namespace rmplan;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

}  // namespace

int main() {
    SceneConfig cfg;
    cfg.n_gbs = 6;
    cfg.n_obstacles = 30;
    cfg.region = {630.0, 90.0, 130.0, 10.0};
    const Scene scene = generate_scene(cfg, 12345);

    const ChannelParams params;
    const AntennaModel antenna;
    const GridSpec grid = grid_for_region(scene.region, 10.0);
    const double epsilon = default_epsilon_db(params);

    std::printf("grid %dx%dx%d, %d GBS, %d obstacles, max threads %d\n", grid.nx, grid.ny,
                grid.nz, cfg.n_gbs, cfg.n_obstacles, omp_get_max_threads());

    std::vector<ChannelGainMap> maps_serial, maps_parallel;
    double t0 = omp_get_wtime();
    for (const Gbs& g : scene.gbs_list)
        maps_serial.push_back(
            build_gain_map(scene, params, antenna, g, grid, epsilon, LosOverride::Auto, Exec::Serial));
    double t_gain_serial = omp_get_wtime() - t0;

    t0 = omp_get_wtime();
    for (const Gbs& g : scene.gbs_list)
        maps_parallel.push_back(build_gain_map(scene, params, antenna, g, grid, epsilon,
                                               LosOverride::Auto, Exec::Parallel));
    double t_gain_parallel = omp_get_wtime() - t0;

    bool gain_match = true;
    for (std::size_t m = 0; m < maps_serial.size(); ++m)
        gain_match = gain_match && bitwise_equal(maps_serial[m].gain_db, maps_parallel[m].gain_db);

    std::vector<double> loads;
    for (const Gbs& g : scene.gbs_list) loads.push_back(g.loading_factor);

    t0 = omp_get_wtime();
    const SinrMap sinr_serial = build_sinr_map(maps_serial, loads, params, grid, Exec::Serial);
    double t_sinr_serial = omp_get_wtime() - t0;

    t0 = omp_get_wtime();
    const SinrMap sinr_parallel = build_sinr_map(maps_serial, loads, params, grid, Exec::Parallel);
    double t_sinr_parallel = omp_get_wtime() - t0;

    const bool sinr_match = bitwise_equal(sinr_serial.sinr_db, sinr_parallel.sinr_db) &&
                            sinr_serial.assoc == sinr_parallel.assoc;

    std::printf("gain maps: serial %.4f s, parallel %.4f s, speedup %.2fx, outputs %s\n",
                t_gain_serial, t_gain_parallel, t_gain_serial / t_gain_parallel,
                gain_match ? "identical" : "DIFFER");
    std::printf("sinr map:  serial %.4f s, parallel %.4f s, speedup %.2fx, outputs %s\n",
                t_sinr_serial, t_sinr_parallel, t_sinr_serial / t_sinr_parallel,
                sinr_match ? "identical" : "DIFFER");
    return gain_match && sinr_match ? 0 : 1;
}
