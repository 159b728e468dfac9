#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rcav {

/// Axis-aligned faces of the unit square/cube. X2_0 is the face x2 = 0,
/// X2_1 the opposite face x2 = 1.
enum class Face : int { X1_0 = 0, X2_0, X3_0, X1_1, X2_1, X3_1 };

int face_axis(Face f);    // 0-based normal axis
bool face_upper(Face f);  // true for faces at coordinate 1
Face make_face(int axis, bool upper);
std::string face_tag(Face f);
Face parse_face_tag(const std::string& tag);

/// Boundary-inclusive discretization of [0,1]^dim plus a uniform time axis.
/// Spatial nodes x_j = j/(n_nodes-1); time nodes t_j = j*dt; c0 = 1.
struct Grid {
    int dim = 2;
    int n_nodes = 0;
    double dt = 0.0;
    int n_time = 0;

    double h() const { return 1.0 / (n_nodes - 1); }
    double T() const { return (n_time - 1) * dt; }
    double node(int j) const { return static_cast<double>(j) * h(); }
    std::size_t n_volume() const;
    std::size_t n_face() const;  // nodes per face, n_nodes^(dim-1)
    void validate() const;       // throws std::invalid_argument

    bool operator==(const Grid&) const = default;
};

/// Scalar field on the spatial grid; index order x1 slowest ... x_d fastest.
struct VolumeField {
    Grid grid;
    std::vector<double> values;

    VolumeField() = default;
    explicit VolumeField(const Grid& g) : grid(g), values(g.n_volume(), 0.0) {}

    double& at(int i1, int i2) { return values[static_cast<std::size_t>(i1) * grid.n_nodes + i2]; }
    double at(int i1, int i2) const { return values[static_cast<std::size_t>(i1) * grid.n_nodes + i2]; }
    double& at(int i1, int i2, int i3) {
        return values[(static_cast<std::size_t>(i1) * grid.n_nodes + i2) * grid.n_nodes + i3];
    }
    double at(int i1, int i2, int i3) const {
        return values[(static_cast<std::size_t>(i1) * grid.n_nodes + i2) * grid.n_nodes + i3];
    }
};

/// Cosine-series coefficients, trunc modes per axis, same index order as
/// VolumeField (first index slowest).
struct CoeffTensor {
    int dim = 2;
    int trunc = 0;
    std::vector<double> coeffs;

    CoeffTensor() = default;
    CoeffTensor(int dim_, int trunc_);

    std::size_t size() const { return coeffs.size(); }
    double& at(int k, int l) { return coeffs[static_cast<std::size_t>(k) * trunc + l]; }
    double at(int k, int l) const { return coeffs[static_cast<std::size_t>(k) * trunc + l]; }
    double& at(int k, int l, int n) {
        return coeffs[(static_cast<std::size_t>(k) * trunc + l) * trunc + n];
    }
    double at(int k, int l, int n) const {
        return coeffs[(static_cast<std::size_t>(k) * trunc + l) * trunc + n];
    }
};

/// Pressure time series on a set of faces. Each face array is time-major:
/// n_time blocks of n_face tangential samples, tangential axes in increasing
/// order (x1 slowest among them).
struct BoundarySeries {
    Grid grid;
    std::vector<Face> faces;
    std::vector<std::vector<double>> data;  // aligned with faces

    bool has_face(Face f) const;
    const std::vector<double>& face_data(Face f) const;
    std::vector<double>& face_data(Face f);
    void add_face(Face f);
};

/// Plain Euclidean norm over all samples of all faces.
double l2_norm(const BoundarySeries& g);
/// a - b; both must have identical grids and face sets.
BoundarySeries subtract(const BoundarySeries& a, const BoundarySeries& b);

enum class Backend { direct, fast };
Backend parse_backend(const std::string& s);

struct WindowParams {
    std::string kind = "bump";
    int oversample = 16;
};

/// Everything a reconstruction run needs to know.
struct ReconConfig {
    Grid grid;
    int trunc = 0;      // 0 -> grid.n_nodes
    int iterations = 2; // K
    std::vector<Face> faces;  // empty -> lower adjacent faces (all 2*dim if six_face)
    WindowParams window;
    Backend backend = Backend::fast;
    int freq_oversample = 8;
    bool six_face = false;
    bool stop_on_residual_growth = false;

    int resolved_trunc() const { return trunc > 0 ? trunc : grid.n_nodes; }
    std::vector<Face> resolved_faces() const;
    void validate() const;
};

namespace detail {
std::size_t ipow(std::size_t base, int exp);
}

}  // namespace rcav
