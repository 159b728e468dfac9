#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcav/phantom.hpp"
#include "rcav/types.hpp"

namespace rcav {

/// Parsed run configuration. Phantom defaults to three balls on the
/// x_j = 0.25 plane intersections when the file lists none.
struct RunConfig {
    ReconConfig recon;
    double noise_level = 0.0;
    std::uint64_t noise_seed = 1;
    std::vector<BallSpec> balls;

    std::vector<BallSpec> resolved_balls() const {
        return balls.empty() ? default_phantom(recon.grid.dim) : balls;
    }
};

/// Loads a line-oriented `key = value` file with [grid], [window], [phantom],
/// [recon] and [noise] sections. Parse and consistency errors throw
/// std::runtime_error with the offending line number; an inconsistent
/// T / dt / n_time triple is fatal.
RunConfig load_run_config(const std::string& path);

/// Same parser on in-memory text (used by tests).
RunConfig parse_run_config(const std::string& text, const std::string& name = "<config>");

}  // namespace rcav
