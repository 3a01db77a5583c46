// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rmplan {

// Seedable generator with fixed scalar-draw recipes so that a (config, seed)
// pair reproduces the same scene on any platform. The engine is std::mt19937_64
// (its output sequence is pinned by the standard); the conversions below avoid
// std::uniform_real_distribution and friends, whose outputs are
// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1): top 53 bits of one engine draw.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Rayleigh with the given mean, by inverse CDF.
    double rayleigh(double mean) {
        const double sigma = mean * std::sqrt(2.0 / M_PI);
        return sigma * std::sqrt(-2.0 * std::log1p(-uniform01()));
    }

    // Exponential(1), used for unit-mean squared Rayleigh fading gains.
    double exponential() { return -std::log1p(-uniform01()); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace rmplan
