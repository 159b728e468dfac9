#pragma once

#include <span>
#include <vector>

#include "rcav/types.hpp"

namespace rcav {

/// Eigenfrequency of the Neumann Laplacian cavity mode, pi*sqrt(k^2+l^2(+n^2)).
double eigenfrequency(int k, int l);
double eigenfrequency(int k, int l, int n);

/// Squared L2 norm of the cavity mode over the unit square/cube:
/// (1/2)^(number of nonzero indices).
double mode_norm_sq(int k, int l);
double mode_norm_sq(int k, int l, int n);

/// Cosine coefficients of a grid field. The discrete convention reproduces
/// any single on-grid mode exactly (trapezoid-consistent DCT-I with the
/// endpoint modes k = 0 and k = n_nodes-1 carrying weight 1 instead of 2).
/// Requires trunc <= n_nodes.
CoeffTensor cosine_analyze(const VolumeField& f, int trunc);

/// Sums the cosine series on the grid; inverse of cosine_analyze when
/// trunc == n_nodes.
VolumeField cosine_synth(const CoeffTensor& F, const Grid& grid);

/// Tangential cosine coefficients of one face snapshot (n_nodes^(dim-1)
/// samples, tangential axes in increasing order). Same convention as
/// cosine_analyze, one dimension lower.
std::vector<double> face_cosine_analyze(std::span<const double> snapshot, int dim, int n_nodes,
                                        int trunc);

/// Inverse of face_cosine_analyze (sums the tangential series on face nodes).
std::vector<double> face_cosine_synth(std::span<const double> coeffs, int dim, int n_nodes,
                                      int trunc);

/// Per-mode time series of a whole face array (time-major, as stored in
/// BoundarySeries): returns trunc^(dim-1) series of length n_time, mode-major
/// layout [mode][t].
std::vector<double> face_mode_series(std::span<const double> face_array, const Grid& grid,
                                     int trunc);

}  // namespace rcav
