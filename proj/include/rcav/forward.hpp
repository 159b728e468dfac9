#pragma once

#include <span>
#include <vector>

#include "rcav/types.hpp"

namespace rcav {

/// s(t_j) = sum_m coeffs[m] * cos(omegas[m] * t_j) on t_j = j*dt,
/// j = 0..n_time-1. Backend::direct sums term by term; Backend::fast spreads
/// the frequencies onto an oversampled uniform grid with a Gaussian kernel
/// and takes one FFT (relative accuracy well below 1e-5).
std::vector<double> eval_mode_series(std::span<const double> coeffs,
                                     std::span<const double> omegas, int n_time, double dt,
                                     Backend backend);

/// Forward operator W: boundary pressure time series on cfg's faces for the
/// initial pressure f. Per face: cosine-analyze f, evaluate the mode series
/// along the face normal for every tangential mode, then synthesize the
/// tangential series per time sample.
BoundarySeries simulate_boundary(const VolumeField& f, const ReconConfig& cfg);

/// Full interior solution p(t, .) for validation: each cosine coefficient
/// damped by cos(omega*t). trunc = 0 means full grid content.
VolumeField pressure_field(const VolumeField& f, double t, int trunc = 0);

}  // namespace rcav
