#include "rcav/phantom.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rcav {

namespace {

double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * (3.0 - 2.0 * u);
}

// uniform (0,1] double from the top 53 bits
double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

}  // namespace

VolumeField ball_phantom(std::span<const BallSpec> specs, const Grid& grid) {
    grid.validate();
    if (specs.empty()) throw std::invalid_argument("phantom needs at least one ball");
    const int n = grid.n_nodes;
    const double h = grid.h();
    VolumeField f(grid);
    for (const BallSpec& b : specs) {
        const double eps = b.smoothing > 0.0 ? b.smoothing : 2.0 * h;
        if (grid.dim == 2) {
            for (int i = 0; i < n; ++i) {
                const double d1 = grid.node(i) - b.center[0];
                for (int j = 0; j < n; ++j) {
                    const double d2 = grid.node(j) - b.center[1];
                    const double r = std::sqrt(d1 * d1 + d2 * d2);
                    f.at(i, j) += b.amplitude * smoothstep((b.radius - r) / eps);
                }
            }
        } else {
            for (int i = 0; i < n; ++i) {
                const double d1 = grid.node(i) - b.center[0];
                for (int j = 0; j < n; ++j) {
                    const double d2 = grid.node(j) - b.center[1];
                    for (int k = 0; k < n; ++k) {
                        const double d3 = grid.node(k) - b.center[2];
                        const double r = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
                        f.at(i, j, k) += b.amplitude * smoothstep((b.radius - r) / eps);
                    }
                }
            }
        }
    }
    return f;
}

std::vector<BallSpec> default_phantom(int dim) {
    if (dim == 2) {
        return {{{0.25, 0.25, 0.0}, 0.12, 1.0, 0.0},
                {{0.60, 0.25, 0.0}, 0.09, 0.8, 0.0},
                {{0.25, 0.62, 0.0}, 0.07, 0.6, 0.0}};
    }
    if (dim == 3) {
        return {{{0.55, 0.25, 0.25}, 0.10, 1.0, 0.0},
                {{0.25, 0.60, 0.25}, 0.08, 0.8, 0.0},
                {{0.25, 0.25, 0.65}, 0.07, 0.9, 0.0}};
    }
    throw std::invalid_argument("dim must be 2 or 3");
}

BoundarySeries add_noise(const BoundarySeries& g, double level, std::uint64_t seed) {
    if (level < 0.0) throw std::invalid_argument("noise level must be nonnegative");
    if (level == 0.0) return g;

    // Box-Muller on a fixed-width generator keeps the stream identical
    // across standard libraries.
    std::mt19937_64 rng(seed);
    BoundarySeries noise = g;
    double nsq = 0.0;
    for (auto& arr : noise.data) {
        std::size_t i = 0;
        while (i < arr.size()) {
            const double u1 = uniform01(rng);
            const double u2 = uniform01(rng);
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double z0 = r * std::cos(2.0 * M_PI * u2);
            const double z1 = r * std::sin(2.0 * M_PI * u2);
            arr[i] = z0;
            nsq += z0 * z0;
            ++i;
            if (i < arr.size()) {
                arr[i] = z1;
                nsq += z1 * z1;
                ++i;
            }
        }
    }
    const double target = level * l2_norm(g);
    const double scale = nsq > 0.0 ? target / std::sqrt(nsq) : 0.0;

    BoundarySeries out = g;
    for (std::size_t fi = 0; fi < out.data.size(); ++fi)
        for (std::size_t i = 0; i < out.data[fi].size(); ++i)
            out.data[fi][i] += scale * noise.data[fi][i];
    return out;
}

}  // namespace rcav
