#include "rcav/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rcav {

namespace detail {
std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}
}  // namespace detail

int face_axis(Face f) { return static_cast<int>(f) % 3; }

bool face_upper(Face f) { return static_cast<int>(f) >= 3; }

Face make_face(int axis, bool upper) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("face axis out of range");
    return static_cast<Face>(axis + (upper ? 3 : 0));
}

std::string face_tag(Face f) {
    return "X" + std::to_string(face_axis(f) + 1) + (face_upper(f) ? "_1" : "_0");
}

Face parse_face_tag(const std::string& tag) {
    for (int i = 0; i < 6; ++i) {
        Face f = static_cast<Face>(i);
        if (face_tag(f) == tag) return f;
    }
    throw std::invalid_argument("unknown face tag '" + tag + "'");
}

std::size_t Grid::n_volume() const { return detail::ipow(n_nodes, dim); }

std::size_t Grid::n_face() const { return detail::ipow(n_nodes, dim - 1); }

void Grid::validate() const {
    if (dim != 2 && dim != 3) throw std::invalid_argument("grid dim must be 2 or 3");
    if (n_nodes < 3) throw std::invalid_argument("grid needs at least 3 nodes per axis");
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (n_time < 2) throw std::invalid_argument("grid needs at least 2 time samples");
}

CoeffTensor::CoeffTensor(int dim_, int trunc_)
    : dim(dim_), trunc(trunc_), coeffs(detail::ipow(trunc_, dim_), 0.0) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("coeff tensor dim must be 2 or 3");
    if (trunc < 1) throw std::invalid_argument("truncation must be positive");
}

bool BoundarySeries::has_face(Face f) const {
    return std::find(faces.begin(), faces.end(), f) != faces.end();
}

const std::vector<double>& BoundarySeries::face_data(Face f) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i] == f) return data[i];
    throw std::invalid_argument("boundary series is missing face " + face_tag(f));
}

std::vector<double>& BoundarySeries::face_data(Face f) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i] == f) return data[i];
    throw std::invalid_argument("boundary series is missing face " + face_tag(f));
}

void BoundarySeries::add_face(Face f) {
    if (has_face(f)) throw std::invalid_argument("duplicate face " + face_tag(f));
    faces.push_back(f);
    data.emplace_back(static_cast<std::size_t>(grid.n_time) * grid.n_face(), 0.0);
}

double l2_norm(const BoundarySeries& g) {
    double s = 0.0;
    for (const auto& arr : g.data)
        for (double v : arr) s += v * v;
    return std::sqrt(s);
}

BoundarySeries subtract(const BoundarySeries& a, const BoundarySeries& b) {
    if (!(a.grid == b.grid) || a.faces != b.faces)
        throw std::invalid_argument("boundary series layouts differ");
    BoundarySeries r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i)
        for (std::size_t j = 0; j < r.data[i].size(); ++j) r.data[i][j] -= b.data[i][j];
    return r;
}

Backend parse_backend(const std::string& s) {
    if (s == "direct") return Backend::direct;
    if (s == "fast") return Backend::fast;
    throw std::invalid_argument("unknown backend '" + s + "' (expected direct|fast)");
}

std::vector<Face> ReconConfig::resolved_faces() const {
    if (!faces.empty()) return faces;
    std::vector<Face> out;
    int count = six_face ? 2 * grid.dim : grid.dim;
    for (int i = 0; i < count; ++i)
        out.push_back(make_face(i % grid.dim, i >= grid.dim));
    return out;
}

void ReconConfig::validate() const {
    grid.validate();
    if (resolved_trunc() > grid.n_nodes)
        throw std::invalid_argument("truncation exceeds grid nodes");
    if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
    if (freq_oversample < 1) throw std::invalid_argument("freq_oversample must be >= 1");
    if (window.oversample < 4) throw std::invalid_argument("window oversample must be >= 4");
    for (Face f : resolved_faces())
        if (face_axis(f) >= grid.dim)
            throw std::invalid_argument("face " + face_tag(f) + " is out of range for dim " +
                                        std::to_string(grid.dim));
}

}  // namespace rcav
