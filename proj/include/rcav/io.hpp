#pragma once

#include <string>
#include <vector>

#include "rcav/metrics.hpp"
#include "rcav/types.hpp"

namespace rcav {

/// Volume file: "RCVOL 1\n", "dim n_nodes\n", then n_nodes^dim float64
/// little-endian values, x1 slowest. The written grid carries no time axis;
/// readers get dt = n_time = 0 and must supply them from config.
void write_volume(const std::string& path, const VolumeField& f);
VolumeField read_volume(const std::string& path);

/// Boundary file: "RCBND 1\n", "dim n_nodes n_time n_faces\n", then per face
/// one tag line (e.g. "X2_0") followed by n_time blocks of tangential
/// samples, float64 little-endian. dt is not stored; readers supply it.
void write_boundary(const std::string& path, const BoundarySeries& g);
BoundarySeries read_boundary(const std::string& path, double dt);

/// 8-bit binary PGM (P5), min-max normalized. For dim 3 the slice fixes one
/// axis at a node; rows follow the slower free axis.
void write_pgm_slice(const std::string& path, const VolumeField& f, int slice_axis,
                     int slice_node);

void write_profile_csv(const std::string& path,
                       const std::vector<std::pair<double, double>>& profile);
void write_error_csv(const std::string& path, const ErrorReport& report);

}  // namespace rcav
