// SPDX-License-Identifier: Apache-2.0
#include "rmplan/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rmplan {

namespace {

constexpr double kUlaFloorDb = -30.0;
// The NLoS distance slope changes sign near 483 km altitude; long before that
// the urban model is meaningless, so cap the accepted altitude.
constexpr double kMaxAltitudeM = 10000.0;

void check_geometry(double altitude_m, double dist_m) {
    if (!(altitude_m > 0.0)) throw std::invalid_argument("channel: altitude must be positive");
    if (altitude_m > kMaxAltitudeM) throw std::invalid_argument("channel: altitude above model range");
    if (!(dist_m > 0.0)) throw std::invalid_argument("channel: coincident GBS and UAV positions");
}

double free_space_power_db(double dist_m, double freq_ghz) {
    return -(32.45 + 20.0 * std::log10(dist_m) + 20.0 * std::log10(freq_ghz));
}

// Urban-micro LoS power gain, capped by free space.
double los_power_db(double altitude_m, double dist_m, double freq_ghz) {
    const double umi = -30.9 - (22.25 - 0.5 * std::log10(altitude_m)) * std::log10(dist_m) -
                       20.0 * std::log10(freq_ghz);
    return std::min(free_space_power_db(dist_m, freq_ghz), umi);
}

// Urban-micro NLoS power gain, never above the LoS value.
double nlos_power_db(double altitude_m, double dist_m, double freq_ghz) {
    const double umi = -32.4 - (43.2 - 7.6 * std::log10(altitude_m)) * std::log10(dist_m) -
                       20.0 * std::log10(freq_ghz);
    return std::min(los_power_db(altitude_m, dist_m, freq_ghz), umi);
}

}  // namespace

double noise_power_dbm(double psd_dbm_per_hz, double bandwidth_hz, double noise_figure_db) {
    return psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double default_epsilon_db(const ChannelParams& params) {
    return (params.noise_power_dbm - params.tx_power_dbm) / 2.0;
}

double antenna_gain_db(const AntennaModel& model, const Vec3& gbs_pos, const Vec3& target_pos) {
    if (model.kind == AntennaKind::Isotropic) return 0.0;
    if (model.n_elements < 1) throw std::invalid_argument("antenna: n_elements must be >= 1");

    const Vec3 d = target_pos - gbs_pos;
    const double range = d.norm();
    if (!(range > 0.0)) throw std::invalid_argument("antenna: coincident positions");

    const double sin_theta = d.z / range;
    const double sin_tilt = std::sin(model.tilt_deg * M_PI / 180.0);
    const double psi = 2.0 * M_PI * model.element_spacing * (sin_theta - sin_tilt);

    // Closed-form array factor |sin(N psi/2) / sin(psi/2)|; at psi = 2*pi*k the
    // elements add coherently to N.
    const int n = model.n_elements;
    const double half = psi / 2.0;
    double af;
    if (std::abs(std::sin(half)) < 1e-12) {
        af = static_cast<double>(n);
    } else {
        af = std::abs(std::sin(n * half) / std::sin(half));
    }
    if (af <= 0.0) return kUlaFloorDb;
    const double gain = 10.0 * std::log10(af * af / n);
    return std::max(gain, kUlaFloorDb);
}

double los_gain_db(const ChannelParams& params, const AntennaModel& antenna, const Gbs& gbs,
                   const Vec3& uav_pos) {
    const double d = distance(gbs.position, uav_pos);
    check_geometry(uav_pos.z, d);
    const double ga = antenna_gain_db(antenna, gbs.position, uav_pos);
    return ga / 2.0 + los_power_db(uav_pos.z, d, params.carrier_freq_ghz) / 2.0;
}

double nlos_gain_db(const ChannelParams& params, const AntennaModel& antenna, const Gbs& gbs,
                    const Vec3& uav_pos) {
    const double d = distance(gbs.position, uav_pos);
    check_geometry(uav_pos.z, d);
    const double ga = antenna_gain_db(antenna, gbs.position, uav_pos);
    return ga / 2.0 + nlos_power_db(uav_pos.z, d, params.carrier_freq_ghz) / 2.0;
}

double large_scale_gain_db(const Scene& scene, const ChannelParams& params,
                           const AntennaModel& antenna, const Gbs& gbs, const Vec3& uav_pos,
                           LosOverride override_mode) {
    switch (override_mode) {
        case LosOverride::ForceLos:
            return los_gain_db(params, antenna, gbs, uav_pos);
        case LosOverride::ForceNlos:
            return nlos_gain_db(params, antenna, gbs, uav_pos);
        case LosOverride::Auto:
            break;
    }
    return is_los(scene, gbs, uav_pos) ? los_gain_db(params, antenna, gbs, uav_pos)
                                       : nlos_gain_db(params, antenna, gbs, uav_pos);
}

}  // namespace rmplan
