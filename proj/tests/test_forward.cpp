#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rcav/forward.hpp"
#include "rcav/spectral.hpp"

using namespace rcav;

namespace {

ReconConfig config2(int n, double T, Backend backend = Backend::direct) {
    ReconConfig cfg;
    cfg.grid.dim = 2;
    cfg.grid.n_nodes = n;
    cfg.grid.dt = 1.0 / (n - 1);
    cfg.grid.n_time = static_cast<int>(std::lround(T / cfg.grid.dt)) + 1;
    cfg.backend = backend;
    return cfg;
}

VolumeField mode_field_2d(const Grid& g, int k, int l) {
    VolumeField f(g);
    for (int i = 0; i < g.n_nodes; ++i)
        for (int j = 0; j < g.n_nodes; ++j)
            f.at(i, j) = std::cos(M_PI * k * g.node(i)) * std::cos(M_PI * l * g.node(j));
    return f;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("eval_mode_series basics") {
    const std::vector<double> one{1.0};
    auto s = eval_mode_series(one, std::vector<double>{0.0}, 8, 0.125, Backend::direct);
    for (double v : s) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    s = eval_mode_series(one, std::vector<double>{M_PI}, 9, 0.25, Backend::direct);
    for (int j = 0; j < 9; ++j)
        CHECK(s[j] == doctest::Approx(std::cos(M_PI * j * 0.25)).epsilon(1e-14));

    CHECK_THROWS_AS((void)eval_mode_series(one, std::vector<double>{1.0, 2.0}, 4, 0.1,
                                           Backend::direct),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)eval_mode_series(one, std::vector<double>{-1.0}, 4, 0.1,
                                           Backend::direct),
                    std::invalid_argument);
}

TEST_CASE("fast series evaluation matches the direct sum") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int m = 64;
    std::vector<double> c(m), w(m);
    for (int i = 0; i < m; ++i) {
        c[i] = dist(rng);
        w[i] = eigenfrequency(5, i);  // one row of cavity frequencies
    }
    const int nt = 129;
    const double dt = 1.0 / 64.0;
    const auto direct = eval_mode_series(c, w, nt, dt, Backend::direct);
    const auto fast = eval_mode_series(c, w, nt, dt, Backend::fast);
    double scale = 0.0;
    for (double v : direct) scale = std::max(scale, std::abs(v));
    CHECK(max_abs_diff(direct, fast) / scale < 1e-5);  // spec target; typically ~1e-9
}

TEST_CASE("fast series evaluation handles frequencies beyond the time Nyquist") {
    // omega*dt > 2*pi exercises the wrap-around
    const std::vector<double> c{0.7, -0.3};
    const std::vector<double> w{eigenfrequency(200, 200), eigenfrequency(3, 1)};
    const int nt = 65;
    const double dt = 1.0 / 32.0;
    const auto direct = eval_mode_series(c, w, nt, dt, Backend::direct);
    const auto fast = eval_mode_series(c, w, nt, dt, Backend::fast);
    CHECK(max_abs_diff(direct, fast) < 1e-6);
}

TEST_CASE("pressure field at t = 0 returns the initial condition") {
    const ReconConfig cfg = config2(33, 1.0);
    const VolumeField f = oracle::random_field(cfg.grid, 4);
    const VolumeField p0 = pressure_field(f, 0.0);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        CHECK(p0.values[i] == doctest::Approx(f.values[i]).epsilon(1e-12));
}

TEST_CASE("pressure field of a single mode flips sign at the half period") {
    const ReconConfig cfg = config2(33, 1.0);
    const VolumeField f = mode_field_2d(cfg.grid, 2, 1);
    const double t = M_PI / eigenfrequency(2, 1);
    const VolumeField p = pressure_field(f, t);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        CHECK(p.values[i] == doctest::Approx(-f.values[i]).epsilon(1e-11).scale(1.0));
}

TEST_CASE("pressure field damps every coefficient by cos(omega t)") {
    const ReconConfig cfg = config2(17, 1.0);
    const VolumeField f = oracle::random_field(cfg.grid, 5);
    const double t = 0.37;
    const CoeffTensor before = cosine_analyze(f, 17);
    const CoeffTensor after = cosine_analyze(pressure_field(f, t), 17);
    for (int k = 0; k < 17; ++k)
        for (int l = 0; l < 17; ++l) {
            const double want = before.at(k, l) * std::cos(eigenfrequency(k, l) * t);
            CHECK(after.at(k, l) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
            // cosine evolution is even in t
            const double back = before.at(k, l) * std::cos(eigenfrequency(k, l) * -t);
            CHECK(want == back);
        }
}

TEST_CASE("single-mode boundary trace is the exact product of cosines") {
    ReconConfig cfg = config2(65, 2.0);
    cfg.faces = {Face::X2_0, Face::X1_0};
    const VolumeField f = mode_field_2d(cfg.grid, 3, 2);
    const BoundarySeries g = simulate_boundary(f, cfg);
    const double omega = eigenfrequency(3, 2);
    const auto& trace = g.face_data(Face::X2_0);
    for (int j = 0; j < cfg.grid.n_time; ++j)
        for (int i = 0; i < cfg.grid.n_nodes; ++i) {
            const double want =
                std::cos(3 * M_PI * cfg.grid.node(i)) * std::cos(omega * j * cfg.grid.dt);
            CHECK(trace[static_cast<std::size_t>(j) * cfg.grid.n_nodes + i] ==
                  doctest::Approx(want).epsilon(1e-11).scale(1.0));
        }
    // the adjacent face sees the tangential mode l = 2
    const auto& trace1 = g.face_data(Face::X1_0);
    for (int j = 0; j < cfg.grid.n_time; ++j)
        for (int i = 0; i < cfg.grid.n_nodes; ++i) {
            const double want =
                std::cos(2 * M_PI * cfg.grid.node(i)) * std::cos(omega * j * cfg.grid.dt);
            CHECK(trace1[static_cast<std::size_t>(j) * cfg.grid.n_nodes + i] ==
                  doctest::Approx(want).epsilon(1e-11).scale(1.0));
        }
}

TEST_CASE("constant initial pressure stays constant on every face") {
    ReconConfig cfg = config2(17, 1.0);
    cfg.faces = {Face::X1_0, Face::X2_0, Face::X1_1, Face::X2_1};
    VolumeField f(cfg.grid);
    for (auto& v : f.values) v = 1.0;
    const BoundarySeries g = simulate_boundary(f, cfg);
    for (const auto& arr : g.data)
        for (double v : arr) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("upper-face data carries the parity factor") {
    ReconConfig cfg = config2(33, 1.0);
    cfg.faces = {Face::X2_1};
    const VolumeField f = mode_field_2d(cfg.grid, 2, 3);
    const BoundarySeries g = simulate_boundary(f, cfg);
    const auto& trace = g.face_data(Face::X2_1);
    const double omega = eigenfrequency(2, 3);
    for (int j = 0; j < cfg.grid.n_time; ++j)
        for (int i = 0; i < cfg.grid.n_nodes; ++i) {
            const double want = -std::cos(2 * M_PI * cfg.grid.node(i)) *
                                std::cos(omega * j * cfg.grid.dt);  // cos(3*pi) = -1
            CHECK(trace[static_cast<std::size_t>(j) * cfg.grid.n_nodes + i] ==
                  doctest::Approx(want).epsilon(1e-11).scale(1.0));
        }
}

TEST_CASE("random field boundary data matches the dense series oracle") {
    ReconConfig cfg = config2(17, 1.5);
    cfg.faces = {Face::X2_0, Face::X1_0};
    const VolumeField f = oracle::random_field(cfg.grid, 12);
    const BoundarySeries g = simulate_boundary(f, cfg);
    for (Face face : cfg.faces) {
        const auto dense = oracle::dense_boundary_2d(f, face);
        CHECK(max_abs_diff(g.face_data(face), dense) < 1e-10);
    }
}

TEST_CASE("boundary data equals the restricted pressure field") {
    ReconConfig cfg = config2(17, 1.0);
    cfg.faces = {Face::X2_0};
    const VolumeField f = oracle::random_field(cfg.grid, 13);
    const BoundarySeries g = simulate_boundary(f, cfg);
    const auto& arr = g.face_data(Face::X2_0);
    for (int j = 0; j < cfg.grid.n_time; ++j) {
        const VolumeField p = pressure_field(f, j * cfg.grid.dt);
        for (int i = 0; i < cfg.grid.n_nodes; ++i)
            CHECK(arr[static_cast<std::size_t>(j) * cfg.grid.n_nodes + i] ==
                  doctest::Approx(p.at(i, 0)).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("forward operator is linear") {
    ReconConfig cfg = config2(17, 1.0);
    cfg.faces = {Face::X2_0, Face::X1_0};
    const VolumeField a = oracle::random_field(cfg.grid, 21);
    const VolumeField b = oracle::random_field(cfg.grid, 22);
    VolumeField combo(cfg.grid);
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = 0.7 * a.values[i] - 1.3 * b.values[i];
    const BoundarySeries ga = simulate_boundary(a, cfg);
    const BoundarySeries gb = simulate_boundary(b, cfg);
    const BoundarySeries gc = simulate_boundary(combo, cfg);
    for (std::size_t fi = 0; fi < gc.data.size(); ++fi)
        for (std::size_t i = 0; i < gc.data[fi].size(); ++i)
            CHECK(gc.data[fi][i] ==
                  doctest::Approx(0.7 * ga.data[fi][i] - 1.3 * gb.data[fi][i]).epsilon(1e-11).scale(1.0));
}

TEST_CASE("fast and direct forward backends agree on every face") {
    ReconConfig direct_cfg = config2(33, 1.0, Backend::direct);
    direct_cfg.faces = {Face::X1_0, Face::X2_0, Face::X1_1, Face::X2_1};
    ReconConfig fast_cfg = direct_cfg;
    fast_cfg.backend = Backend::fast;
    const VolumeField f = oracle::random_field(direct_cfg.grid, 33);
    const BoundarySeries gd = simulate_boundary(f, direct_cfg);
    const BoundarySeries gf = simulate_boundary(f, fast_cfg);
    for (std::size_t fi = 0; fi < gd.data.size(); ++fi) {
        double scale = 0.0;
        for (double v : gd.data[fi]) scale = std::max(scale, std::abs(v));
        CHECK(max_abs_diff(gd.data[fi], gf.data[fi]) / scale < 1e-5);
    }
}

TEST_CASE("3D single mode trace") {
    ReconConfig cfg;
    cfg.grid = Grid{3, 17, 1.0 / 16.0, 17};
    cfg.faces = {Face::X2_0};
    VolumeField f(cfg.grid);
    for (int i = 0; i < 17; ++i)
        for (int j = 0; j < 17; ++j)
            for (int k = 0; k < 17; ++k)
                f.at(i, j, k) = std::cos(M_PI * 2 * cfg.grid.node(i)) *
                                std::cos(M_PI * 1 * cfg.grid.node(j)) *
                                std::cos(M_PI * 3 * cfg.grid.node(k));
    const BoundarySeries g = simulate_boundary(f, cfg);
    const auto& arr = g.face_data(Face::X2_0);
    const double omega = eigenfrequency(2, 1, 3);
    const std::size_t nf = cfg.grid.n_face();
    for (int j = 0; j < cfg.grid.n_time; ++j)
        for (int a = 0; a < 17; ++a)
            for (int b = 0; b < 17; ++b) {
                const double want = std::cos(M_PI * 2 * cfg.grid.node(a)) *
                                    std::cos(M_PI * 3 * cfg.grid.node(b)) *
                                    std::cos(omega * j * cfg.grid.dt);
                CHECK(arr[j * nf + static_cast<std::size_t>(a) * 17 + b] ==
                      doctest::Approx(want).epsilon(1e-11).scale(1.0));
            }
}
