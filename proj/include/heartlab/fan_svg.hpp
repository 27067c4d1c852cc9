#pragma once

#include <cstdint>
#include <string>

#include "heartlab/json_io.hpp"

namespace heartlab {

struct FanOptions {
    int max_length = 10;  // Weyl elements drawn on the level-one slice
    double radius = 2.5;  // viewport half-width in slice coordinates
};

// Level-one slice {(-, delta) = 1} tiled by the chambers w C^+, next to the
// level-zero plane cut into the faces w C^0_J. Rank 1 and 2 only.
std::string render_fan_svg(const CartanData& c, const FanOptions& opt = {});

// Random coweights (levels of both signs and zero) with their located hearts.
json sample_fan_points(const CartanData& c, int count, std::uint64_t seed);
// Re-locate every sample and compare; returns the number of mismatches.
int revalidate_fan_points(const CartanData& c, const json& samples);

}  // namespace heartlab
