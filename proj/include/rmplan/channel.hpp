// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rmplan/geometry.hpp"
#include "rmplan/scene.hpp"

namespace rmplan {

// Per-resource-block link budget. Powers are dBm; all channel gains in this
// library are amplitude dB, i.e. half the power-dB value, so squaring a gain
// in the SINR arithmetic is a plain x2 in dB.
struct ChannelParams {
    double carrier_freq_ghz = 2.0;
    double tx_power_dbm = 24.0103;
    double noise_power_dbm = -107.44727494896694;
};

// sigma^2 = PSD + 10*log10(bandwidth) + noise figure.
double noise_power_dbm(double psd_dbm_per_hz, double bandwidth_hz, double noise_figure_db);

// Gain threshold at which average received power falls to the noise power.
double default_epsilon_db(const ChannelParams& params);

enum class AntennaKind { Isotropic, Ula };

struct AntennaModel {
    AntennaKind kind = AntennaKind::Isotropic;
    int n_elements = 8;
    double tilt_deg = -10.0;              // negative = downtilt
    double element_spacing = 0.5;         // wavelengths
};

// Isotropic: 0 dB. ULA: array factor 10*log10(|sum_k exp(j*2*pi*spacing*k*
// (sin(theta) - sin(tilt)))|^2 / N) with theta the elevation angle from the
// GBS toward the target, floored at -30 dB.
double antenna_gain_db(const AntennaModel& model, const Vec3& gbs_pos, const Vec3& target_pos);

enum class LosOverride { Auto, ForceLos, ForceNlos };

// Large-scale amplitude gains (dB). Both are capped by the free-space value
// and nlos_gain_db <= los_gain_db for equal inputs.
double los_gain_db(const ChannelParams& params, const AntennaModel& antenna, const Gbs& gbs,
                   const Vec3& uav_pos);
double nlos_gain_db(const ChannelParams& params, const AntennaModel& antenna, const Gbs& gbs,
                    const Vec3& uav_pos);

// Auto selects by obstacle occlusion; ForceLos / ForceNlos ignore geometry.
double large_scale_gain_db(const Scene& scene, const ChannelParams& params,
                           const AntennaModel& antenna, const Gbs& gbs, const Vec3& uav_pos,
                           LosOverride override_mode = LosOverride::Auto);

}  // namespace rmplan
