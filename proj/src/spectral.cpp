#include "rcav/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "fft_cache.hpp"

namespace rcav {

namespace {

// Per-axis forward scale: gamma_k / (2*(N-1)) applied to the raw DCT-I
// output, gamma = 1 for the constant and Nyquist modes, 2 otherwise.
double forward_scale(int k, int n_nodes) {
    const double gamma = (k == 0 || k == n_nodes - 1) ? 1.0 : 2.0;
    return gamma / (2.0 * (n_nodes - 1));
}

// Per-axis synthesis pre-scale so that one raw DCT-I sums the series:
// interior modes are halved, endpoint modes pass through.
double synth_scale(int k, int n_nodes) {
    return (k == 0 || k == n_nodes - 1) ? 1.0 : 0.5;
}

void analyze_cube(std::vector<double>& data, int dim, int n_nodes) {
    for (int axis = 0; axis < dim; ++axis) detail::dct1_axis(data, dim, n_nodes, axis);
    // apply the separable normalization
    if (dim == 1) {
        for (int k = 0; k < n_nodes; ++k) data[k] *= forward_scale(k, n_nodes);
    } else if (dim == 2) {
        std::size_t idx = 0;
        for (int k = 0; k < n_nodes; ++k) {
            const double sk = forward_scale(k, n_nodes);
            for (int l = 0; l < n_nodes; ++l, ++idx) data[idx] *= sk * forward_scale(l, n_nodes);
        }
    } else {
        std::size_t idx = 0;
        for (int k = 0; k < n_nodes; ++k) {
            const double sk = forward_scale(k, n_nodes);
            for (int l = 0; l < n_nodes; ++l) {
                const double skl = sk * forward_scale(l, n_nodes);
                for (int n = 0; n < n_nodes; ++n, ++idx) data[idx] *= skl * forward_scale(n, n_nodes);
            }
        }
    }
}

// Zero-pads trunc^dim coefficients into an n_nodes^dim cube with the
// synthesis pre-scale applied.
std::vector<double> padded_coeffs(std::span<const double> coeffs, int dim, int trunc,
                                  int n_nodes) {
    std::vector<double> out(detail::ipow(n_nodes, dim), 0.0);
    if (dim == 1) {
        for (int k = 0; k < trunc; ++k) out[k] = coeffs[k] * synth_scale(k, n_nodes);
    } else if (dim == 2) {
        for (int k = 0; k < trunc; ++k) {
            const double sk = synth_scale(k, n_nodes);
            for (int l = 0; l < trunc; ++l)
                out[static_cast<std::size_t>(k) * n_nodes + l] =
                    coeffs[static_cast<std::size_t>(k) * trunc + l] * sk * synth_scale(l, n_nodes);
        }
    } else {
        for (int k = 0; k < trunc; ++k) {
            const double sk = synth_scale(k, n_nodes);
            for (int l = 0; l < trunc; ++l) {
                const double skl = sk * synth_scale(l, n_nodes);
                for (int n = 0; n < trunc; ++n)
                    out[(static_cast<std::size_t>(k) * n_nodes + l) * n_nodes + n] =
                        coeffs[(static_cast<std::size_t>(k) * trunc + l) * trunc + n] * skl *
                        synth_scale(n, n_nodes);
            }
        }
    }
    return out;
}

std::vector<double> truncated(const std::vector<double>& full, int dim, int n_nodes, int trunc) {
    if (trunc == n_nodes) return full;
    std::vector<double> out(detail::ipow(trunc, dim));
    if (dim == 1) {
        for (int k = 0; k < trunc; ++k) out[k] = full[k];
    } else if (dim == 2) {
        for (int k = 0; k < trunc; ++k)
            for (int l = 0; l < trunc; ++l)
                out[static_cast<std::size_t>(k) * trunc + l] =
                    full[static_cast<std::size_t>(k) * n_nodes + l];
    } else {
        for (int k = 0; k < trunc; ++k)
            for (int l = 0; l < trunc; ++l)
                for (int n = 0; n < trunc; ++n)
                    out[(static_cast<std::size_t>(k) * trunc + l) * trunc + n] =
                        full[(static_cast<std::size_t>(k) * n_nodes + l) * n_nodes + n];
    }
    return out;
}

void check_trunc(int trunc, int n_nodes) {
    if (trunc < 1) throw std::invalid_argument("truncation must be positive");
    if (trunc > n_nodes)
        throw std::invalid_argument("truncation " + std::to_string(trunc) +
                                    " exceeds grid nodes " + std::to_string(n_nodes));
}

}  // namespace

double eigenfrequency(int k, int l) {
    return M_PI * std::sqrt(static_cast<double>(k) * k + static_cast<double>(l) * l);
}

double eigenfrequency(int k, int l, int n) {
    return M_PI *
           std::sqrt(static_cast<double>(k) * k + static_cast<double>(l) * l +
                     static_cast<double>(n) * n);
}

double mode_norm_sq(int k, int l) {
    double v = 1.0;
    if (k != 0) v *= 0.5;
    if (l != 0) v *= 0.5;
    return v;
}

double mode_norm_sq(int k, int l, int n) {
    double v = mode_norm_sq(k, l);
    if (n != 0) v *= 0.5;
    return v;
}

CoeffTensor cosine_analyze(const VolumeField& f, int trunc) {
    f.grid.validate();
    check_trunc(trunc, f.grid.n_nodes);
    std::vector<double> work = f.values;
    analyze_cube(work, f.grid.dim, f.grid.n_nodes);
    CoeffTensor F(f.grid.dim, trunc);
    F.coeffs = truncated(work, f.grid.dim, f.grid.n_nodes, trunc);
    return F;
}

VolumeField cosine_synth(const CoeffTensor& F, const Grid& grid) {
    grid.validate();
    check_trunc(F.trunc, grid.n_nodes);
    if (F.dim != grid.dim) throw std::invalid_argument("coefficient/grid dimension mismatch");
    VolumeField out(grid);
    out.values = padded_coeffs(F.coeffs, grid.dim, F.trunc, grid.n_nodes);
    for (int axis = 0; axis < grid.dim; ++axis)
        detail::dct1_axis(out.values, grid.dim, grid.n_nodes, axis);
    return out;
}

std::vector<double> face_cosine_analyze(std::span<const double> snapshot, int dim, int n_nodes,
                                        int trunc) {
    check_trunc(trunc, n_nodes);
    const int fdim = dim - 1;
    if (snapshot.size() != detail::ipow(n_nodes, fdim))
        throw std::invalid_argument("face snapshot size mismatch");
    std::vector<double> work(snapshot.begin(), snapshot.end());
    analyze_cube(work, fdim, n_nodes);
    return truncated(work, fdim, n_nodes, trunc);
}

std::vector<double> face_cosine_synth(std::span<const double> coeffs, int dim, int n_nodes,
                                      int trunc) {
    check_trunc(trunc, n_nodes);
    const int fdim = dim - 1;
    if (coeffs.size() != detail::ipow(trunc, fdim))
        throw std::invalid_argument("face coefficient size mismatch");
    std::vector<double> out = padded_coeffs(coeffs, fdim, trunc, n_nodes);
    for (int axis = 0; axis < fdim; ++axis) detail::dct1_axis(out, fdim, n_nodes, axis);
    return out;
}

std::vector<double> face_mode_series(std::span<const double> face_array, const Grid& grid,
                                     int trunc) {
    const std::size_t nf = grid.n_face();
    const std::size_t nt = grid.n_time;
    if (face_array.size() != nf * nt) throw std::invalid_argument("face array size mismatch");
    const std::size_t n_modes = detail::ipow(trunc, grid.dim - 1);
    std::vector<double> series(n_modes * nt);
    for (std::size_t j = 0; j < nt; ++j) {
        auto c = face_cosine_analyze(face_array.subspan(j * nf, nf), grid.dim, grid.n_nodes, trunc);
        for (std::size_t m = 0; m < n_modes; ++m) series[m * nt + j] = c[m];
    }
    return series;
}

}  // namespace rcav
