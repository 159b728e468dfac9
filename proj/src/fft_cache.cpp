#include "fft_cache.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <stdexcept>

namespace rcav::detail {

namespace {

struct R2rPlan {
    double* buf = nullptr;
    fftw_plan plan = nullptr;
    R2rPlan() = default;
    R2rPlan(const R2rPlan&) = delete;
    R2rPlan& operator=(const R2rPlan&) = delete;
    ~R2rPlan() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

struct C2cPlan {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
    C2cPlan() = default;
    C2cPlan(const C2cPlan&) = delete;
    C2cPlan& operator=(const C2cPlan&) = delete;
    ~C2cPlan() {
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

R2rPlan& dct1_plan(int n) {
    static std::map<int, R2rPlan> cache;
    R2rPlan& p = cache[n];
    if (!p.plan) {
        p.buf = fftw_alloc_real(n);
        p.plan = fftw_plan_r2r_1d(n, p.buf, p.buf, FFTW_REDFT00, FFTW_ESTIMATE);
    }
    return p;
}

C2cPlan& fft_plan(int n) {
    static std::map<int, C2cPlan> cache;
    C2cPlan& p = cache[n];
    if (!p.plan) {
        p.in = fftw_alloc_complex(n);
        p.out = fftw_alloc_complex(n);
        p.plan = fftw_plan_dft_1d(n, p.in, p.out, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    return p;
}

}  // namespace

void dct1(std::span<const double> in, std::span<double> out) {
    const int n = static_cast<int>(in.size());
    if (n < 2) throw std::invalid_argument("dct1 needs at least 2 samples");
    if (out.size() != in.size()) throw std::invalid_argument("dct1 size mismatch");
    R2rPlan& p = dct1_plan(n);
    std::memcpy(p.buf, in.data(), sizeof(double) * n);
    fftw_execute(p.plan);
    std::memcpy(out.data(), p.buf, sizeof(double) * n);
}

void fft(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    const int n = static_cast<int>(in.size());
    if (out.size() != in.size()) throw std::invalid_argument("fft size mismatch");
    C2cPlan& p = fft_plan(n);
    std::memcpy(p.in, in.data(), sizeof(fftw_complex) * n);
    fftw_execute(p.plan);
    std::memcpy(out.data(), p.out, sizeof(fftw_complex) * n);
}

void dct1_axis(std::span<double> data, int dim, int n, int axis) {
    if (axis < 0 || axis >= dim) throw std::invalid_argument("dct1_axis axis out of range");
    R2rPlan& p = dct1_plan(n);
    const std::size_t nn = static_cast<std::size_t>(n);
    std::size_t stride = 1;
    for (int a = dim - 1; a > axis; --a) stride *= nn;
    const std::size_t block = stride * nn;  // span of one line group along 'axis'
    const std::size_t total = data.size();
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            double* line0 = data.data() + base + off;
            for (std::size_t j = 0; j < nn; ++j) p.buf[j] = line0[j * stride];
            fftw_execute(p.plan);
            for (std::size_t j = 0; j < nn; ++j) line0[j * stride] = p.buf[j];
        }
    }
}

}  // namespace rcav::detail
