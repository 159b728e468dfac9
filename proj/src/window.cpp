#include "rcav/window.hpp"

#include <cmath>
#include <stdexcept>

#include "fft_cache.hpp"
#include "rcav/spectral.hpp"

namespace rcav {

namespace {

constexpr double kPlateauFlat = 0.6;  // flat fraction of the plateau window
constexpr double kQuadGuard = 400.0;  // extra tabulated band; keeps the
                                      // quadrature alias where eta_hat is
                                      // far below machine precision
constexpr int kStencilGuard = 4;

double bump(double t) {
    const double a = std::abs(t);
    if (a >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - a * a));
}

}  // namespace

WindowKind parse_window_kind(const std::string& s) {
    if (s == "bump") return WindowKind::bump;
    if (s == "hann") return WindowKind::hann;
    if (s == "plateau") return WindowKind::plateau;
    throw std::invalid_argument("unknown window kind '" + s + "' (expected bump|hann|plateau)");
}

std::string window_kind_name(WindowKind k) {
    switch (k) {
        case WindowKind::bump: return "bump";
        case WindowKind::hann: return "hann";
        case WindowKind::plateau: return "plateau";
    }
    throw std::invalid_argument("bad window kind");
}

double WindowTable::eta(double t) const {
    const double a = std::abs(t);
    if (a >= 1.0) return 0.0;
    switch (kind) {
        case WindowKind::bump: return bump(t);
        case WindowKind::hann: {
            const double c = std::cos(M_PI * t / 2.0);
            return c * c;
        }
        case WindowKind::plateau: {
            if (a <= kPlateauFlat) return 1.0;
            return bump((a - kPlateauFlat) / (1.0 - kPlateauFlat));
        }
    }
    throw std::invalid_argument("bad window kind");
}

WindowTable make_window(WindowKind kind, int oversample, double xi_max) {
    if (oversample < 4) throw std::invalid_argument("window oversample must be >= 4");
    if (!(xi_max > 0.0)) throw std::invalid_argument("window xi_max must be positive");

    WindowTable w;
    w.kind = kind;
    w.oversample = oversample;
    w.xi_max = xi_max;
    w.dxi = 1.0 / (16.0 * oversample);

    const int n_eta = 1024 * oversample + 1;
    w.samples.resize(n_eta);
    for (int j = 0; j < n_eta; ++j) w.samples[j] = w.eta(-1.0 + 2.0 * j / (n_eta - 1));

    // eta_hat(r*dxi) by DCT-I of eta sampled over [0, L], L = pi/dxi. The
    // trapezoid sum equals the integral up to aliasing at 2*Mq*dxi, pushed
    // out by the guard band.
    const int n_keep = static_cast<int>(std::floor(xi_max / w.dxi)) + 1 + kStencilGuard;
    const int mq = n_keep - 1 + static_cast<int>(std::ceil(kQuadGuard / w.dxi));
    const double L = M_PI / w.dxi;
    const double hq = L / mq;
    std::vector<double> et(mq + 1, 0.0);
    const int support = static_cast<int>(std::floor(1.0 / hq));
    for (int j = 0; j <= std::min(support, mq); ++j) et[j] = w.eta(j * hq);
    std::vector<double> y(mq + 1);
    detail::dct1(et, y);

    const double scale = hq / std::sqrt(2.0 * M_PI);
    w.hat_samples.resize(n_keep);
    for (int r = 0; r < n_keep; ++r) w.hat_samples[r] = scale * y[r];
    w.hat_zero = w.hat_samples[0];
    if (!(w.hat_zero > 0.0)) throw std::runtime_error("window has nonpositive eta_hat(0)");

    w.B = 0.0;
    const int n_table = n_keep - kStencilGuard;
    for (int r = 0; r < n_table; ++r) {
        const double xi = r * w.dxi;
        w.B = std::max(w.B, std::abs(w.hat_samples[r]) * (1.0 + xi * xi));
    }
    return w;
}

WindowTable make_window(const WindowParams& params, double xi_max) {
    return make_window(parse_window_kind(params.kind), params.oversample, xi_max);
}

double required_xi_max(const ReconConfig& cfg) {
    const int m = cfg.resolved_trunc() - 1;
    const double omega_max = cfg.grid.dim == 2 ? eigenfrequency(m, m) : eigenfrequency(m, m, m);
    return 2.0 * cfg.grid.T() * omega_max + 16.0;
}

WindowTable make_window_for(const ReconConfig& cfg) {
    return make_window(cfg.window, required_xi_max(cfg));
}

double eta_hat(const WindowTable& w, double xi) {
    const double a = std::abs(xi);
    if (a > w.xi_max)
        throw std::out_of_range("eta_hat query " + std::to_string(a) +
                                " beyond table extent " + std::to_string(w.xi_max));
    const double x = a / w.dxi;
    const int m = static_cast<int>(std::floor(x));
    const double s = x - m;
    // cubic Lagrange on nodes m-1..m+2; negative indices mirror (eta_hat even)
    double acc = 0.0;
    static const double node[4] = {-1.0, 0.0, 1.0, 2.0};
    for (int a4 = 0; a4 < 4; ++a4) {
        double wgt = 1.0;
        for (int b = 0; b < 4; ++b)
            if (a4 != b) wgt *= (s - node[b]) / (node[a4] - node[b]);
        const int idx = std::abs(m - 1 + a4);
        acc += wgt * w.hat_samples[idx];
    }
    return acc;
}

double contraction_time_threshold(double B, int dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    const double c = dim == 2 ? 17.0 : 25.0;
    return std::sqrt(B * (12.0 + c * M_PI * M_PI) / 6.0) / M_PI;
}

double sufficient_T(const WindowTable& w, int dim) {
    return contraction_time_threshold(w.B, dim);
}

}  // namespace rcav
