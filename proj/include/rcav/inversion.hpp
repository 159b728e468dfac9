#pragma once

#include <span>
#include <vector>

#include "rcav/types.hpp"
#include "rcav/window.hpp"

namespace rcav {

/// Which measured face supplies the equation for a coefficient. Ties follow
/// the printed systems: 2D sends l >= k to the x2 = 0 face and k > l to
/// x1 = 0; 3D sends k >= l, k >= n to x1 = 0, l > k, l >= n to x2 = 0 and
/// n > k, n > l to x3 = 0. The all-zero index always reads the x2 = 0 face.
Face assigned_face(int k, int l);
Face assigned_face(int k, int l, int n);

/// Windowed Fourier estimate of an evenly extended series sampled on
/// t_j = j*dt over [0, T], dt = T/(len-1):
///   (2*pi)^(-1/2) * int_{-T}^{T} eta(t/T) * series(t) * e^(-i*xi*t) dt
/// at each target frequency, by composite trapezoid rule. Backend::direct
/// sums per target; Backend::fast evaluates one DCT on a uniform frequency
/// grid of spacing pi/(T*freq_oversample) and interpolates with cubic
/// Lagrange polynomials. Targets above the time-grid Nyquist fold, matching
/// the trapezoid sum exactly.
std::vector<double> windowed_spectrum(std::span<const double> series, double T,
                                      const WindowTable& w, std::span<const double> targets,
                                      Backend backend, int freq_oversample);

/// Crude inverse R: per assigned face, tangential mode series -> windowed
/// spectrum at the mode eigenfrequency, scaled by 2/(T*eta_hat(0)) (1/(T*
/// eta_hat(0)) for the all-zero index).
CoeffTensor initial_coeffs(const BoundarySeries& g, const ReconConfig& cfg,
                           const WindowTable& w);

/// Coupling operator A by explicit summation along the assigned face's
/// normal index. Oracle-scale cost (trunc^(dim+1) table lookups).
CoeffTensor apply_A_dense(const CoeffTensor& H, const ReconConfig& cfg, const WindowTable& w);

/// Residual iteration f_K = f_{K-1} + synth(R(g - W f_{K-1})) starting from
/// f_0 = synth(R g); returns all iterates f_0..f_K. With
/// cfg.stop_on_residual_growth the list ends early once the boundary
/// residual norm increases. Accepts data on the lower adjacent faces, or on
/// the upper ones (handled by reflecting the cavity).
std::vector<VolumeField> reconstruct(const BoundarySeries& g, const ReconConfig& cfg,
                                     const WindowTable& w);

/// Fourier-domain Neumann iteration F_K = F0 - A F_{K-1} (oracle for the
/// residual iteration).
CoeffTensor neumann_coeffs(const CoeffTensor& F0, const ReconConfig& cfg, const WindowTable& w,
                           int iterations);

/// Assembles the truncated I + A matrix column by column and solves
/// (I+A) F = F0 directly. Throws if the matrix is singular.
CoeffTensor dense_solve(const CoeffTensor& F0, const ReconConfig& cfg, const WindowTable& w);

struct ContractionReport {
    double measured_norm;  // induced inf-norm of the truncated A (max row sum)
    double lemma_bound;    // B*(12+17*pi^2)/(6*pi^2*T^2), 25 instead of 17 in 3D
};
ContractionReport contraction_bound(const ReconConfig& cfg, const WindowTable& w);

/// Runs reconstruct on the lower three (two) faces and on the reflected
/// upper ones, returning the pointwise average of the final iterates.
VolumeField six_face_reconstruct(const BoundarySeries& g_all, const ReconConfig& cfg,
                                 const WindowTable& w);

}  // namespace rcav
