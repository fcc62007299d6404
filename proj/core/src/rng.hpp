// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_SRC_RNG_HPP
#define GFMIX_SRC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gfmix::rng {

// mt19937_64 output mapped to (0,1); the engine sequence is fully specified
// by the standard, so results reproduce across platforms for a fixed seed.
inline double unit_uniform(std::mt19937_64& g) {
    for (;;) {
        const double u = static_cast<double>(g() >> 11) * 0x1.0p-53;
        if (u > 0.0 && u < 1.0) return u;
    }
}

// Box-Muller; consumes two uniforms per call.
inline double unit_normal(std::mt19937_64& g) {
    const double u1 = unit_uniform(g);
    const double u2 = unit_uniform(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace gfmix::rng

#endif
