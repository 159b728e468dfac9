#pragma once

#include <string>
#include <vector>

#include "rcav/types.hpp"

namespace rcav {

enum class WindowKind { bump, hann, plateau };

WindowKind parse_window_kind(const std::string& s);
std::string window_kind_name(WindowKind k);

/// The cut-off function eta, its tabulated Fourier transform, and the
/// measured decay constant B with |eta_hat(xi)| <= B/(1+xi^2) over the table.
/// Fourier convention: eta_hat(xi) = (2*pi)^(-1/2) * int eta(t) e^(-i*xi*t) dt,
/// real and even since eta is real and even.
struct WindowTable {
    WindowKind kind = WindowKind::bump;
    int oversample = 16;
    double xi_max = 0.0;
    double dxi = 0.0;                 // spacing of the hat table
    std::vector<double> samples;      // eta on a uniform grid over [-1,1]
    std::vector<double> hat_samples;  // eta_hat at xi = r*dxi (plus stencil guard)
    double hat_zero = 0.0;
    double B = 0.0;

    /// Closed-form evaluation of eta(t); 0 outside (-1,1).
    double eta(double t) const;
};

/// Tabulates eta_hat up to xi_max by spectrally accurate quadrature of the
/// Fourier integral and measures B. oversample >= 4 controls table spacing.
WindowTable make_window(WindowKind kind, int oversample, double xi_max);
WindowTable make_window(const WindowParams& params, double xi_max);

/// Table extent needed by a reconstruction run: covers 2*T*omega_max plus
/// interpolation margin.
double required_xi_max(const ReconConfig& cfg);
WindowTable make_window_for(const ReconConfig& cfg);

/// Interpolated eta_hat (cubic Lagrange on the 4 nearest table nodes, even
/// in xi). Throws std::out_of_range beyond xi_max.
double eta_hat(const WindowTable& w, double xi);

/// Acquisition time above which the coupling operator is provably a
/// contraction: (1/pi)*sqrt(B*(12+17*pi^2)/6) in 2D, 25 instead of 17 in 3D.
double contraction_time_threshold(double B, int dim);
double sufficient_T(const WindowTable& w, int dim);

}  // namespace rcav
