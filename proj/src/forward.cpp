#include "rcav/forward.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fft_cache.hpp"
#include "rcav/spectral.hpp"

namespace rcav {

namespace {

constexpr int kSpreadHalfWidth = 8;  // Gaussian kernel reach in grid cells

int next_pow2(int n) {
    int r = 1;
    while (r < n) r *= 2;
    return r;
}

// One Gaussian-gridding evaluator per (n_time, dt); reused across the
// tangential modes of a face.
class FastSeriesEval {
  public:
    FastSeriesEval(int n_time, double dt) : n_time_(n_time), dt_(dt) {
        r_ = next_pow2(4 * n_time);
        dx_ = 2.0 * M_PI / r_;
        tau_ = std::sqrt(2.0) * M_PI * kSpreadHalfWidth / (static_cast<double>(r_) * r_);
        grid_.resize(r_);
        spec_.resize(r_);
        deconv_.resize(n_time);
        const double amp = dx_ / (2.0 * std::sqrt(M_PI * tau_));
        for (int j = 0; j < n_time; ++j)
            deconv_[j] = amp * std::exp(static_cast<double>(j) * j * tau_);
    }

    void eval(std::span<const double> coeffs, std::span<const double> omegas,
              std::span<double> out) {
        std::fill(grid_.begin(), grid_.end(), std::complex<double>(0.0));
        const double two_pi = 2.0 * M_PI;
        for (std::size_t m = 0; m < coeffs.size(); ++m) {
            if (coeffs[m] == 0.0) continue;
            double x = std::fmod(omegas[m] * dt_, two_pi);
            const double p = x / dx_;
            const int lo = static_cast<int>(std::ceil(p - kSpreadHalfWidth));
            const int hi = static_cast<int>(std::floor(p + kSpreadHalfWidth));
            for (int rr = lo; rr <= hi; ++rr) {
                const double d = x - rr * dx_;
                const int idx = ((rr % r_) + r_) % r_;
                grid_[idx] += coeffs[m] * std::exp(-d * d / (4.0 * tau_));
            }
        }
        detail::fft(grid_, spec_);
        for (int j = 0; j < n_time_; ++j) out[j] = deconv_[j] * spec_[j].real();
    }

  private:
    int n_time_;
    double dt_;
    int r_ = 0;
    double dx_ = 0.0;
    double tau_ = 0.0;
    std::vector<std::complex<double>> grid_, spec_;
    std::vector<double> deconv_;
};

void eval_direct(std::span<const double> coeffs, std::span<const double> omegas, int n_time,
                 double dt, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const double c = coeffs[m];
        if (c == 0.0) continue;
        const double w = omegas[m];
        for (int j = 0; j < n_time; ++j) out[j] += c * std::cos(w * j * dt);
    }
}

void check_series_args(std::span<const double> coeffs, std::span<const double> omegas,
                       int n_time, double dt) {
    if (coeffs.size() != omegas.size())
        throw std::invalid_argument("coefficient/frequency count mismatch");
    if (n_time < 1 || !(dt > 0.0)) throw std::invalid_argument("bad time grid");
    for (double w : omegas)
        if (w < 0.0) throw std::invalid_argument("mode frequencies must be nonnegative");
}

}  // namespace

std::vector<double> eval_mode_series(std::span<const double> coeffs,
                                     std::span<const double> omegas, int n_time, double dt,
                                     Backend backend) {
    check_series_args(coeffs, omegas, n_time, dt);
    std::vector<double> out(n_time);
    if (backend == Backend::direct) {
        eval_direct(coeffs, omegas, n_time, dt, out);
    } else {
        FastSeriesEval ev(n_time, dt);
        ev.eval(coeffs, omegas, out);
    }
    return out;
}

BoundarySeries simulate_boundary(const VolumeField& f, const ReconConfig& cfg) {
    cfg.validate();
    if (!(f.grid == cfg.grid)) throw std::invalid_argument("field grid differs from config grid");
    const auto faces = cfg.resolved_faces();
    if (faces.empty()) throw std::invalid_argument("no faces requested");

    const Grid& grid = cfg.grid;
    const int dim = grid.dim;
    const int m_tr = cfg.resolved_trunc();
    const int nt = grid.n_time;
    const std::size_t nf = grid.n_face();
    const std::size_t n_tang = detail::ipow(m_tr, dim - 1);

    const CoeffTensor F = cosine_analyze(f, m_tr);

    BoundarySeries g;
    g.grid = grid;

    std::vector<double> coeffs(m_tr), omegas(m_tr);
    std::vector<double> series(n_tang * nt);
    std::vector<double> tang(n_tang);
    FastSeriesEval fast_eval(nt, grid.dt);

    for (Face face : faces) {
        g.add_face(face);
        auto& arr = g.face_data(face);
        const int axis = face_axis(face);
        const bool upper = face_upper(face);

        // mode series along the face normal, one per tangential multi-index
        for (std::size_t tm = 0; tm < n_tang; ++tm) {
            int t1 = 0, t2 = 0;  // tangential indices, increasing axis order
            if (dim == 2) {
                t1 = static_cast<int>(tm);
            } else {
                t1 = static_cast<int>(tm) / m_tr;
                t2 = static_cast<int>(tm) % m_tr;
            }
            for (int m = 0; m < m_tr; ++m) {
                int idx[3] = {0, 0, 0};
                idx[axis] = m;
                int pos = 0;
                for (int a = 0; a < dim; ++a) {
                    if (a == axis) continue;
                    idx[a] = pos == 0 ? t1 : t2;
                    ++pos;
                }
                double c = dim == 2 ? F.at(idx[0], idx[1]) : F.at(idx[0], idx[1], idx[2]);
                if (upper && (m & 1)) c = -c;  // cos(pi*m*1) parity
                coeffs[m] = c;
                omegas[m] = dim == 2 ? eigenfrequency(idx[0], idx[1])
                                     : eigenfrequency(idx[0], idx[1], idx[2]);
            }
            std::span<double> row(series.data() + tm * nt, nt);
            if (cfg.backend == Backend::direct)
                eval_direct(coeffs, omegas, nt, grid.dt, row);
            else
                fast_eval.eval(coeffs, omegas, row);
        }

        // per time sample, sum the tangential cosine series on face nodes
        for (int j = 0; j < nt; ++j) {
            for (std::size_t tm = 0; tm < n_tang; ++tm) tang[tm] = series[tm * nt + j];
            auto snapshot = face_cosine_synth(tang, dim, grid.n_nodes, m_tr);
            std::copy(snapshot.begin(), snapshot.end(), arr.begin() + j * nf);
        }
    }
    return g;
}

VolumeField pressure_field(const VolumeField& f, double t, int trunc) {
    const Grid& grid = f.grid;
    grid.validate();
    const int m_tr = trunc > 0 ? trunc : grid.n_nodes;
    CoeffTensor F = cosine_analyze(f, m_tr);
    if (grid.dim == 2) {
        for (int k = 0; k < m_tr; ++k)
            for (int l = 0; l < m_tr; ++l) F.at(k, l) *= std::cos(eigenfrequency(k, l) * t);
    } else {
        for (int k = 0; k < m_tr; ++k)
            for (int l = 0; l < m_tr; ++l)
                for (int n = 0; n < m_tr; ++n)
                    F.at(k, l, n) *= std::cos(eigenfrequency(k, l, n) * t);
    }
    return cosine_synth(F, grid);
}

}  // namespace rcav
