#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rcav/types.hpp"

namespace rcav {

/// One smoothed characteristic function of a ball: amplitude inside radius,
/// 0 outside radius + smoothing, cubic smoothstep ramp across the band.
struct BallSpec {
    std::array<double, 3> center{0.25, 0.25, 0.25};
    double radius = 0.1;
    double amplitude = 1.0;
    double smoothing = 0.0;  // transition width; 0 -> 2h at evaluation
};

/// Sum of smoothed balls sampled on the grid.
VolumeField ball_phantom(std::span<const BallSpec> specs, const Grid& grid);

/// Three balls of various radii centered on pairwise intersections of the
/// planes x_j = 0.25.
std::vector<BallSpec> default_phantom(int dim);

/// Adds i.i.d. Gaussian noise rescaled so that its plain L2 norm over the
/// whole dataset equals level * ||g||_2. Deterministic per seed.
BoundarySeries add_noise(const BoundarySeries& g, double level, std::uint64_t seed);

}  // namespace rcav
