#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rcav::detail {

// Thin cache around FFTW plans keyed by transform size. Plans are created
// with FFTW_ESTIMATE (deterministic) on persistent buffers; callers' data is
// copied through those buffers. Not thread-safe.

/// Unnormalized DCT-I (FFTW REDFT00) of length n >= 2:
///   out_k = in_0 + (-1)^k in_{n-1} + 2 sum_{j=1}^{n-2} in_j cos(pi j k/(n-1)).
void dct1(std::span<const double> in, std::span<double> out);

/// Forward complex DFT of length n: out_j = sum_r in_r exp(-2*pi*i*j*r/n).
void fft(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

/// Applies the unnormalized DCT-I along one axis of a dim-dimensional cube
/// with n nodes per axis (in place). Gather/scatter through the 1D cache.
void dct1_axis(std::span<double> data, int dim, int n, int axis);

}  // namespace rcav::detail
