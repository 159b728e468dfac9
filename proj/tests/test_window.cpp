#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rcav/window.hpp"

using namespace rcav;

TEST_CASE("bump window endpoint values") {
    const WindowTable w = make_window(WindowKind::bump, 4, 64.0);
    CHECK(w.eta(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.eta(1.0) == 0.0);
    CHECK(w.eta(-1.0) == 0.0);
    CHECK(w.eta(1.5) == 0.0);
    // evenness of the stored samples
    const std::size_t n = w.samples.size();
    for (std::size_t j = 0; j < n; ++j)
        CHECK(w.samples[j] == doctest::Approx(w.samples[n - 1 - j]).epsilon(1e-15));
}

TEST_CASE("hat_zero against the quadrature refinement oracle") {
    const WindowTable w = make_window(WindowKind::bump, 8, 64.0);
    const auto eta = [&](double t) { return w.eta(t); };
    const double coarse = oracle::eta_mass(eta, 1 << 14);
    const double fine = oracle::eta_mass(eta, 1 << 15);
    CHECK(std::abs(coarse - fine) < 1e-10);  // two resolutions agree
    CHECK(w.hat_zero == doctest::Approx(fine / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
    CHECK(w.hat_zero > 0.0);
}

TEST_CASE("measured B bounds the table with equality at the argmax") {
    const WindowTable w = make_window(WindowKind::bump, 8, 256.0);
    double best = 0.0;
    for (std::size_t r = 0; r * w.dxi <= w.xi_max; ++r) {
        const double xi = r * w.dxi;
        const double prod = std::abs(w.hat_samples[r]) * (1.0 + xi * xi);
        CHECK(prod <= w.B * (1.0 + 1e-14));
        best = std::max(best, prod);
    }
    CHECK(best == doctest::Approx(w.B).epsilon(1e-14));
}

TEST_CASE("eta_hat interpolation: value at 0, evenness, decay bound") {
    const WindowTable w = make_window(WindowKind::bump, 8, 128.0);
    CHECK(eta_hat(w, 0.0) == doctest::Approx(w.hat_zero).epsilon(1e-15));
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(0.0, 128.0);
    for (int t = 0; t < 200; ++t) {
        const double xi = dist(rng);
        const double v = eta_hat(w, xi);
        CHECK(v == eta_hat(w, -xi));
        CHECK(std::abs(v) <= w.B / (1.0 + xi * xi) * (1.0 + 1e-9) + 1e-13);
    }
    CHECK_THROWS_AS((void)eta_hat(w, 130.0), std::out_of_range);
}

TEST_CASE("table refinement: doubling oversample moves eta_hat by < 1e-9") {
    const WindowTable c = make_window(WindowKind::bump, 8, 64.0);
    const WindowTable f = make_window(WindowKind::bump, 16, 64.0);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(0.0, 64.0);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const double xi = dist(rng);
        worst = std::max(worst, std::abs(eta_hat(c, xi) - eta_hat(f, xi)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("sufficient_T closed form") {
    // limit case B = 0
    CHECK(contraction_time_threshold(0.0, 2) == 0.0);
    CHECK(contraction_time_threshold(0.0, 3) == 0.0);
    // B = 1, dim 2: evaluate (1/pi)*sqrt((12+17*pi^2)/6) independently
    const double expect2 = std::sqrt((12.0 + 17.0 * M_PI * M_PI) / 6.0) / M_PI;
    CHECK(expect2 == doctest::Approx(1.7424046).epsilon(1e-7));  // frozen from the closed form
    CHECK(contraction_time_threshold(1.0, 2) == doctest::Approx(expect2).epsilon(1e-15));
    CHECK(contraction_time_threshold(1.0, 3) > contraction_time_threshold(1.0, 2));

    const WindowTable w = make_window(WindowKind::bump, 8, 64.0);
    CHECK(sufficient_T(w, 3) >= sufficient_T(w, 2));
    CHECK(sufficient_T(w, 2) == doctest::Approx(contraction_time_threshold(w.B, 2)).epsilon(1e-15));
}

TEST_CASE("window kinds parse and validate") {
    CHECK(parse_window_kind("bump") == WindowKind::bump);
    CHECK(parse_window_kind("hann") == WindowKind::hann);
    CHECK(parse_window_kind("plateau") == WindowKind::plateau);
    CHECK_THROWS_AS((void)parse_window_kind("boxcar"), std::invalid_argument);
    CHECK_THROWS_AS((void)make_window(WindowKind::bump, 2, 64.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_window(WindowKind::bump, 8, -1.0), std::invalid_argument);
}

TEST_CASE("hann and plateau windows satisfy the table invariants") {
    for (WindowKind kind : {WindowKind::hann, WindowKind::plateau}) {
        const WindowTable w = make_window(kind, 8, 64.0);
        CAPTURE(window_kind_name(kind));
        CHECK(w.hat_zero > 0.0);
        CHECK(w.eta(1.0) == 0.0);
        CHECK(w.eta(0.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(w.B > 0.0);
        const double mass = oracle::eta_mass([&](double t) { return w.eta(t); }, 1 << 15);
        CHECK(w.hat_zero == doctest::Approx(mass / std::sqrt(2.0 * M_PI)).epsilon(1e-10));
    }
}
