// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmplan/planner.hpp"
#include "rmplan/scene.hpp"

namespace rmplan {

struct OutageResult {
    double length_m = 0.0;
    double outage_m = 0.0;
    double fraction = 0.0;
    bool left_region = false;  // some of the path ran outside the map box
};

// Exact per-cell decomposition of the polyline: every sub-segment lying in a
// cell below the target (or outside the map) counts as outage. No sampling,
// so an all-feasible path reports exactly zero.
OutageResult outage_vs_sinr(const std::vector<Vec3>& waypoints, const SinrMap& map,
                            double gamma_t_db);
OutageResult outage_vs_feasible(const std::vector<Vec3>& waypoints, const FeasibleMap& map);

// Fraction of the path length in outage against the actual SINR map.
double connectivity_outage(const Path& path, const SinrMap& actual_map, double gamma_t_db);

enum class FadingModel { None, RayleighUnitPower };

struct MonteCarloConfig {
    long long n_samples = 100000;
    FadingModel fading = FadingModel::RayleighUnitPower;
    std::uint64_t seed = 0;
};

struct McEstimate {
    double estimate = 0.0;   // linear ratio
    double std_error = 0.0;
};

// Sampled mean of the instantaneous SINR with the serving GBS fixed:
// interferer activity is Bernoulli per its load, squared fading gains are
// Exp(1) under Rayleigh. gains_linear holds amplitude gains; assoc_id is the
// 1-based serving index.
McEstimate mc_expected_sinr(const std::vector<double>& gains_linear,
                            const std::vector<double>& loads, const ChannelParams& params,
                            int assoc_id, const MonteCarloConfig& cfg);

// The deterministic lower bound the SINR maps store, computed without the
// cancellation-prone subtraction.
double expected_sinr_closed_form(const std::vector<double>& gains_linear,
                                 const std::vector<double>& loads, const ChannelParams& params,
                                 int assoc_id);

struct ModeSpec {
    PlanMode mode = PlanMode::Optimal;
    int kappa_xy = 1;
    int kappa_z = 1;
    double outage_tolerance_m = 0.0;
};

struct SweepConfig {
    std::vector<double> gammas;
    std::vector<ModeSpec> modes;
    std::vector<PlanningBasis> bases;
    Vec3 start;
    Vec3 goal;
    double speed = 10.0;
    double delta_d = 10.0;
    bool epsilon_auto = true;
    double epsilon_db = 0.0;
    double worst_case_load = 1.0;
    // With runtimes off the runtime_s column is written as 0 and repeated
    // sweeps are byte-identical.
    bool record_runtime = true;
};

struct SweepRow {
    double gamma_t_db = 0.0;
    std::string mode;
    std::string basis;
    bool feasible = false;
    double length_m = 0.0;
    double outage_fraction = 0.0;
    double runtime_s = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// Builds the maps once, then plans every (gamma, mode, basis) combination.
// Failures become infeasible rows with nan metrics; outage is always against
// the actual-basis map.
SweepResult sweep(const Scene& scene, const ChannelParams& params, const AntennaModel& antenna,
                  const SweepConfig& cfg);

// Header gamma_t_db,mode,basis,feasible,length_m,outage_fraction,runtime_s;
// floats at 6 significant digits, LF endings.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace rmplan
