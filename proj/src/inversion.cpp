#include "rcav/inversion.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "fft_cache.hpp"
#include "rcav/forward.hpp"
#include "rcav/spectral.hpp"

namespace rcav {

namespace {

bool is_origin(const int idx[3]) { return idx[0] == 0 && idx[1] == 0 && idx[2] == 0; }

// Coupling axis of a mode: the normal index of its assigned face. The
// all-zero index couples along the second axis (its row reads the x2 = 0
// face).
int assigned_axis(const int idx[3], int dim) {
    const int k = idx[0], l = idx[1], n = idx[2];
    if (is_origin(idx)) return 1;
    if (dim == 2) return l >= k ? 1 : 0;
    if (k >= l && k >= n) return 0;
    if (l > k && l >= n) return 1;
    return 2;
}

double omega_of(const int idx[3], int dim) {
    return dim == 2 ? eigenfrequency(idx[0], idx[1]) : eigenfrequency(idx[0], idx[1], idx[2]);
}

std::size_t flat_of(const int idx[3], int dim, int m_tr) {
    std::size_t f = 0;
    for (int a = 0; a < dim; ++a) f = f * m_tr + idx[a];
    return f;
}

// iterate all multi-indices of the truncated tensor
template <typename F>
void for_each_index(int dim, int m_tr, F&& fn) {
    int idx[3] = {0, 0, 0};
    if (dim == 2) {
        for (idx[0] = 0; idx[0] < m_tr; ++idx[0])
            for (idx[1] = 0; idx[1] < m_tr; ++idx[1]) fn(idx);
    } else {
        for (idx[0] = 0; idx[0] < m_tr; ++idx[0])
            for (idx[1] = 0; idx[1] < m_tr; ++idx[1])
                for (idx[2] = 0; idx[2] < m_tr; ++idx[2]) fn(idx);
    }
}

// tangential flat index of a mode on its assigned face (coupling axis
// removed, remaining axes in increasing order)
std::size_t tangential_flat(const int idx[3], int dim, int m_tr, int axis) {
    std::size_t f = 0;
    for (int a = 0; a < dim; ++a) {
        if (a == axis) continue;
        f = f * m_tr + idx[a];
    }
    return f;
}

// one windowed-spectrum call feeding a batch of coefficients
struct SpectrumJob {
    std::vector<double> targets;
    std::vector<std::size_t> dest;
    std::vector<double> factors;
};

// jobs[face-slot][tangential index]; face slots follow lower-face axes
std::vector<std::vector<SpectrumJob>> build_recon_plan(int dim, int m_tr, double T,
                                                       double hat0) {
    const std::size_t n_tang = detail::ipow(m_tr, dim - 1);
    std::vector<std::vector<SpectrumJob>> jobs(dim);
    for (int a = 0; a < dim; ++a) jobs[a].resize(n_tang);
    const double factor = 2.0 / (T * hat0);
    const double factor_dc = 1.0 / (T * hat0);
    for_each_index(dim, m_tr, [&](const int idx[3]) {
        const int axis = assigned_axis(idx, dim);
        SpectrumJob& job = jobs[axis][tangential_flat(idx, dim, m_tr, axis)];
        job.targets.push_back(omega_of(idx, dim));
        job.dest.push_back(flat_of(idx, dim, m_tr));
        job.factors.push_back(is_origin(idx) ? factor_dc : factor);
    });
    return jobs;
}

// couplings of one row: diagonal term plus the sum along the coupling axis
double row_accumulate(const int idx[3], int dim, int m_tr, double T, const WindowTable& w,
                      const CoeffTensor* H, double* abs_sum) {
    const double hat0 = w.hat_zero;
    const int axis = assigned_axis(idx, dim);
    const bool origin = is_origin(idx);
    const double omega = omega_of(idx, dim);
    double acc = 0.0, asum = 0.0;
    if (!origin) {
        const double c = eta_hat(w, 2.0 * T * omega) / hat0;
        if (H) acc += c * H->coeffs[flat_of(idx, dim, m_tr)];
        asum += std::abs(c);
    }
    int other[3] = {idx[0], idx[1], idx[2]};
    for (int m = 0; m < m_tr; ++m) {
        if (m == idx[axis]) continue;
        other[axis] = m;
        const double om = omega_of(other, dim);
        const double c = origin ? eta_hat(w, T * om) / hat0
                                : (eta_hat(w, T * (omega - om)) + eta_hat(w, T * (omega + om))) /
                                      hat0;
        if (H) acc += c * H->coeffs[flat_of(other, dim, m_tr)];
        asum += std::abs(c);
    }
    if (abs_sum) *abs_sum = asum;
    return acc;
}

BoundarySeries reflect_to_lower(const BoundarySeries& g) {
    const Grid& grid = g.grid;
    const int n = grid.n_nodes;
    const int nt = grid.n_time;
    BoundarySeries out;
    out.grid = grid;
    for (int a = 0; a < grid.dim; ++a) {
        const auto& src = g.face_data(make_face(a, true));
        out.add_face(make_face(a, false));
        auto& dst = out.face_data(make_face(a, false));
        if (grid.dim == 2) {
            for (int j = 0; j < nt; ++j)
                for (int i = 0; i < n; ++i)
                    dst[static_cast<std::size_t>(j) * n + (n - 1 - i)] =
                        src[static_cast<std::size_t>(j) * n + i];
        } else {
            const std::size_t nf = grid.n_face();
            for (int j = 0; j < nt; ++j)
                for (int i1 = 0; i1 < n; ++i1)
                    for (int i2 = 0; i2 < n; ++i2)
                        dst[j * nf + static_cast<std::size_t>(n - 1 - i1) * n + (n - 1 - i2)] =
                            src[j * nf + static_cast<std::size_t>(i1) * n + i2];
        }
    }
    return out;
}

VolumeField flip_all_axes(const VolumeField& f) {
    const int n = f.grid.n_nodes;
    VolumeField out(f.grid);
    if (f.grid.dim == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(n - 1 - i, n - 1 - j) = f.at(i, j);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out.at(n - 1 - i, n - 1 - j, n - 1 - k) = f.at(i, j, k);
    }
    return out;
}

bool has_lower_faces(const BoundarySeries& g, int dim) {
    for (int a = 0; a < dim; ++a)
        if (!g.has_face(make_face(a, false))) return false;
    return true;
}

bool has_upper_faces(const BoundarySeries& g, int dim) {
    for (int a = 0; a < dim; ++a)
        if (!g.has_face(make_face(a, true))) return false;
    return true;
}

BoundarySeries select_faces(const BoundarySeries& g, const std::vector<Face>& faces) {
    BoundarySeries out;
    out.grid = g.grid;
    for (Face f : faces) {
        out.faces.push_back(f);
        out.data.push_back(g.face_data(f));
    }
    return out;
}

std::vector<VolumeField> reconstruct_lower(const BoundarySeries& g, const ReconConfig& cfg,
                                           const WindowTable& w) {
    std::vector<Face> lower;
    for (int a = 0; a < cfg.grid.dim; ++a) lower.push_back(make_face(a, false));
    const BoundarySeries g_used = select_faces(g, lower);

    ReconConfig step = cfg;
    step.faces = lower;
    step.six_face = false;

    std::vector<VolumeField> iterates;
    iterates.push_back(cosine_synth(initial_coeffs(g_used, step, w), cfg.grid));
    double prev_resid = l2_norm(g_used);  // residual of the zero field
    for (int k = 1; k <= cfg.iterations; ++k) {
        const BoundarySeries resid = subtract(g_used, simulate_boundary(iterates.back(), step));
        const double rn = l2_norm(resid);
        if (cfg.stop_on_residual_growth && rn > prev_resid) break;
        prev_resid = rn;
        VolumeField next = iterates.back();
        const VolumeField corr = cosine_synth(initial_coeffs(resid, step, w), cfg.grid);
        for (std::size_t i = 0; i < next.values.size(); ++i) next.values[i] += corr.values[i];
        iterates.push_back(std::move(next));
    }
    return iterates;
}

}  // namespace

Face assigned_face(int k, int l) {
    const int idx[3] = {k, l, 0};
    return make_face(assigned_axis(idx, 2), false);
}

Face assigned_face(int k, int l, int n) {
    const int idx[3] = {k, l, n};
    return make_face(assigned_axis(idx, 3), false);
}

std::vector<double> windowed_spectrum(std::span<const double> series, double T,
                                      const WindowTable& w, std::span<const double> targets,
                                      Backend backend, int freq_oversample) {
    const int n = static_cast<int>(series.size());
    if (n < 2) throw std::invalid_argument("windowed_spectrum needs at least 2 samples");
    if (!(T > 0.0)) throw std::invalid_argument("acquisition time must be positive");
    for (double xi : targets)
        if (xi < 0.0) throw std::invalid_argument("spectrum targets must be nonnegative");
    const double dt = T / (n - 1);
    const double scale = 2.0 * dt / std::sqrt(2.0 * M_PI);

    // windowed samples with trapezoid endpoint weights of the even extension
    // (eta(1) = 0 makes the last one a no-op for the provided kinds)
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = w.eta(j * dt / T) * series[j];
    v[n - 1] *= 0.5;

    std::vector<double> out(targets.size());
    if (backend == Backend::direct) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            double acc = 0.5 * v[0];
            for (int j = 1; j < n; ++j) acc += v[j] * std::cos(targets[i] * j * dt);
            out[i] = scale * acc;
        }
        return out;
    }

    if (freq_oversample < 1) throw std::invalid_argument("freq_oversample must be >= 1");
    // one DCT on the zero-padded series gives the trapezoid values on the
    // uniform grid xi_r = r*pi/(T*q) up to the time-grid Nyquist pi/dt;
    // DCT-I weights j = 0 by 1 and the interior by 2, so Y_r/2 is exactly
    // the half-weighted j = 0 sum
    const int q = freq_oversample;
    const std::size_t len = static_cast<std::size_t>(q) * (n - 1) + 1;
    std::vector<double> padded(len, 0.0);
    std::copy(v.begin(), v.end(), padded.begin());
    std::vector<double> table(len);
    detail::dct1(padded, table);
    const int last = static_cast<int>(len) - 1;
    const double dxi = M_PI / (T * q);
    const double period = 2.0 * M_PI / dt;

    static const double node[4] = {-1.0, 0.0, 1.0, 2.0};
    for (std::size_t i = 0; i < targets.size(); ++i) {
        double xi = std::fmod(targets[i], period);
        if (xi > 0.5 * period) xi = period - xi;  // discrete spectrum is even about Nyquist
        const double x = xi / dxi;
        const int m = static_cast<int>(std::floor(x));
        const double s = x - m;
        double acc = 0.0;
        for (int a = 0; a < 4; ++a) {
            double wgt = 1.0;
            for (int b = 0; b < 4; ++b)
                if (a != b) wgt *= (s - node[b]) / (node[a] - node[b]);
            int ri = m - 1 + a;
            if (ri < 0) ri = -ri;
            if (ri > last) ri = 2 * last - ri;
            acc += wgt * table[ri];
        }
        out[i] = scale * 0.5 * acc;
    }
    return out;
}

CoeffTensor initial_coeffs(const BoundarySeries& g, const ReconConfig& cfg,
                           const WindowTable& w) {
    cfg.validate();
    if (!(g.grid == cfg.grid)) throw std::invalid_argument("data grid differs from config grid");
    const int dim = cfg.grid.dim;
    const int m_tr = cfg.resolved_trunc();
    const double T = cfg.grid.T();
    const int nt = cfg.grid.n_time;

    const auto plan = build_recon_plan(dim, m_tr, T, w.hat_zero);
    CoeffTensor F0(dim, m_tr);
    for (int a = 0; a < dim; ++a) {
        const Face face = make_face(a, false);
        const auto series = face_mode_series(g.face_data(face), cfg.grid, m_tr);
        for (std::size_t tm = 0; tm < plan[a].size(); ++tm) {
            const SpectrumJob& job = plan[a][tm];
            if (job.targets.empty()) continue;
            const std::span<const double> row(series.data() + tm * nt, nt);
            const auto vals =
                windowed_spectrum(row, T, w, job.targets, cfg.backend, cfg.freq_oversample);
            for (std::size_t i = 0; i < vals.size(); ++i)
                F0.coeffs[job.dest[i]] = job.factors[i] * vals[i];
        }
    }
    return F0;
}

CoeffTensor apply_A_dense(const CoeffTensor& H, const ReconConfig& cfg, const WindowTable& w) {
    const int dim = cfg.grid.dim;
    const int m_tr = H.trunc;
    if (H.dim != dim) throw std::invalid_argument("coefficient dimension mismatch");
    const double T = cfg.grid.T();
    CoeffTensor E(dim, m_tr);
    for_each_index(dim, m_tr, [&](const int idx[3]) {
        E.coeffs[flat_of(idx, dim, m_tr)] = row_accumulate(idx, dim, m_tr, T, w, &H, nullptr);
    });
    return E;
}

std::vector<VolumeField> reconstruct(const BoundarySeries& g, const ReconConfig& cfg,
                                     const WindowTable& w) {
    cfg.validate();
    const int dim = cfg.grid.dim;
    if (has_lower_faces(g, dim)) return reconstruct_lower(g, cfg, w);
    if (has_upper_faces(g, dim)) {
        const BoundarySeries refl = reflect_to_lower(g);
        auto iterates = reconstruct_lower(refl, cfg, w);
        for (auto& f : iterates) f = flip_all_axes(f);
        return iterates;
    }
    throw std::invalid_argument(
        "reconstruction needs data on all lower adjacent faces (or all upper ones)");
}

CoeffTensor neumann_coeffs(const CoeffTensor& F0, const ReconConfig& cfg, const WindowTable& w,
                           int iterations) {
    if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
    CoeffTensor F = F0;
    for (int k = 1; k <= iterations; ++k) {
        const CoeffTensor AF = apply_A_dense(F, cfg, w);
        for (std::size_t i = 0; i < F.coeffs.size(); ++i)
            F.coeffs[i] = F0.coeffs[i] - AF.coeffs[i];
    }
    return F;
}

CoeffTensor dense_solve(const CoeffTensor& F0, const ReconConfig& cfg, const WindowTable& w) {
    const int dim = F0.dim;
    const int m_tr = F0.trunc;
    const std::size_t n = F0.coeffs.size();
    Eigen::MatrixXd mat(n, n);
    CoeffTensor basis(dim, m_tr);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(basis.coeffs.begin(), basis.coeffs.end(), 0.0);
        basis.coeffs[j] = 1.0;
        const CoeffTensor col = apply_A_dense(basis, cfg, w);
        for (std::size_t i = 0; i < n; ++i) mat(i, j) = col.coeffs[i] + (i == j ? 1.0 : 0.0);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
    if (!lu.isInvertible()) throw std::runtime_error("truncated I+A matrix is singular");
    Eigen::VectorXd rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs(i) = F0.coeffs[i];
    const Eigen::VectorXd sol = lu.solve(rhs);
    CoeffTensor F(dim, m_tr);
    for (std::size_t i = 0; i < n; ++i) F.coeffs[i] = sol(i);
    return F;
}

ContractionReport contraction_bound(const ReconConfig& cfg, const WindowTable& w) {
    cfg.validate();
    const int dim = cfg.grid.dim;
    const int m_tr = cfg.resolved_trunc();
    const double T = cfg.grid.T();
    double worst = 0.0;
    for_each_index(dim, m_tr, [&](const int idx[3]) {
        double asum = 0.0;
        row_accumulate(idx, dim, m_tr, T, w, nullptr, &asum);
        worst = std::max(worst, asum);
    });
    const double c = dim == 2 ? 17.0 : 25.0;
    const double lemma = w.B * (12.0 + c * M_PI * M_PI) / (6.0 * M_PI * M_PI * T * T);
    return {worst, lemma};
}

VolumeField six_face_reconstruct(const BoundarySeries& g_all, const ReconConfig& cfg,
                                 const WindowTable& w) {
    const int dim = cfg.grid.dim;
    if (!has_lower_faces(g_all, dim) || !has_upper_faces(g_all, dim))
        throw std::invalid_argument("six-face reconstruction needs data on all faces");
    std::vector<Face> lower, upper;
    for (int a = 0; a < dim; ++a) {
        lower.push_back(make_face(a, false));
        upper.push_back(make_face(a, true));
    }
    const auto it_lower = reconstruct(select_faces(g_all, lower), cfg, w);
    const auto it_upper = reconstruct(select_faces(g_all, upper), cfg, w);
    VolumeField avg = it_lower.back();
    const VolumeField& other = it_upper.back();
    for (std::size_t i = 0; i < avg.values.size(); ++i)
        avg.values[i] = 0.5 * (avg.values[i] + other.values[i]);
    return avg;
}

}  // namespace rcav
