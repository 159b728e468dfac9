#pragma once

// Test-only reference implementations. Everything here goes through plain
// summation so the library's transform paths can be checked against an
// independent route.

#include <cmath>
#include <random>
#include <vector>

#include "rcav/types.hpp"

namespace oracle {

inline double trap_w(int j, int n) { return (j == 0 || j == n - 1) ? 0.5 : 1.0; }

inline rcav::VolumeField random_field(const rcav::Grid& grid, unsigned seed) {
    rcav::VolumeField f(grid);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : f.values) v = dist(rng);
    return f;
}

// Trapezoid quadrature of the cosine-series coefficient integral, normalized
// by the same quadrature of the squared mode. The discrete normalization
// reproduces single on-grid modes exactly at every index (it equals the
// continuous norm table below the grid Nyquist).
inline double cosine_coeff_2d(const rcav::VolumeField& f, int k, int l) {
    const int n = f.grid.n_nodes;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ci = std::cos(M_PI * k * f.grid.node(i));
        for (int j = 0; j < n; ++j) {
            const double w = trap_w(i, n) * trap_w(j, n);
            const double phi = ci * std::cos(M_PI * l * f.grid.node(j));
            num += w * f.at(i, j) * phi;
            den += w * phi * phi;
        }
    }
    return num / den;
}

inline double cosine_coeff_3d(const rcav::VolumeField& f, int k, int l, int m) {
    const int n = f.grid.n_nodes;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ci = std::cos(M_PI * k * f.grid.node(i));
        for (int j = 0; j < n; ++j) {
            const double cj = std::cos(M_PI * l * f.grid.node(j));
            for (int p = 0; p < n; ++p) {
                const double w = trap_w(i, n) * trap_w(j, n) * trap_w(p, n);
                const double phi = ci * cj * std::cos(M_PI * m * f.grid.node(p));
                num += w * f.at(i, j, p) * phi;
                den += w * phi * phi;
            }
        }
    }
    return num / den;
}

// 1D face-snapshot coefficient by the same quadrature
inline double face_coeff_1d(const std::vector<double>& snap, int k) {
    const int n = static_cast<int>(snap.size());
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) / (n - 1);
        const double phi = std::cos(M_PI * k * x);
        num += trap_w(j, n) * snap[j] * phi;
        den += trap_w(j, n) * phi * phi;
    }
    return num / den;
}

// Term-by-term boundary evaluation of the eigenfunction series for a 2D
// field: p(t, x)|face from all grid modes, coefficients by the quadrature
// above. O(N^4) per face.
inline std::vector<double> dense_boundary_2d(const rcav::VolumeField& f, rcav::Face face) {
    const rcav::Grid& g = f.grid;
    const int n = g.n_nodes;
    const int nt = g.n_time;
    std::vector<double> coeff(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) coeff[static_cast<std::size_t>(k) * n + l] = cosine_coeff_2d(f, k, l);

    const int axis = rcav::face_axis(face);
    const double plane = rcav::face_upper(face) ? 1.0 : 0.0;
    std::vector<double> out(static_cast<std::size_t>(nt) * n, 0.0);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const double c = coeff[static_cast<std::size_t>(k) * n + l];
            if (c == 0.0) continue;
            const double omega = M_PI * std::sqrt(double(k) * k + double(l) * l);
            const double cnorm = std::cos(M_PI * (axis == 0 ? k : l) * plane);
            const int tang_mode = axis == 0 ? l : k;
            for (int j = 0; j < nt; ++j) {
                const double ct = std::cos(omega * j * g.dt);
                for (int i = 0; i < n; ++i)
                    out[static_cast<std::size_t>(j) * n + i] +=
                        c * cnorm * std::cos(M_PI * tang_mode * g.node(i)) * ct;
            }
        }
    return out;
}

// Trapezoid quadrature of int_{-1}^{1} eta(t) dt at a given resolution.
template <typename Eta>
double eta_mass(Eta&& eta, int n_intervals) {
    double acc = 0.0;
    const double h = 2.0 / n_intervals;
    for (int j = 0; j <= n_intervals; ++j) {
        const double t = -1.0 + j * h;
        acc += trap_w(j, n_intervals + 1) * eta(t);
    }
    return acc * h;
}

}  // namespace oracle
