#include "rcav/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rcav {

namespace {

double trapezoid_weight(int j, int n) { return (j == 0 || j == n - 1) ? 0.5 : 1.0; }

int node_index(double coord, const Grid& grid) {
    const double x = coord / grid.h();
    const int j = static_cast<int>(std::lround(x));
    if (j < 0 || j >= grid.n_nodes || std::abs(x - j) > 1e-9)
        throw std::invalid_argument("line coordinate " + std::to_string(coord) +
                                    " is not a grid node");
    return j;
}

}  // namespace

double rel_error(const VolumeField& f_hat, const VolumeField& f_true, Norm norm) {
    if (!(f_hat.grid == f_true.grid)) throw std::invalid_argument("field grids differ");
    const Grid& grid = f_hat.grid;
    const int n = grid.n_nodes;
    if (norm == Norm::linf) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < f_true.values.size(); ++i) {
            num = std::max(num, std::abs(f_hat.values[i] - f_true.values[i]));
            den = std::max(den, std::abs(f_true.values[i]));
        }
        if (den == 0.0) throw std::invalid_argument("reference field is zero");
        return num / den;
    }
    double num = 0.0, den = 0.0;
    std::size_t i = 0;
    if (grid.dim == 2) {
        for (int a = 0; a < n; ++a) {
            const double wa = trapezoid_weight(a, n);
            for (int b = 0; b < n; ++b, ++i) {
                const double w = wa * trapezoid_weight(b, n);
                const double d = f_hat.values[i] - f_true.values[i];
                num += w * d * d;
                den += w * f_true.values[i] * f_true.values[i];
            }
        }
    } else {
        for (int a = 0; a < n; ++a) {
            const double wa = trapezoid_weight(a, n);
            for (int b = 0; b < n; ++b) {
                const double wab = wa * trapezoid_weight(b, n);
                for (int c = 0; c < n; ++c, ++i) {
                    const double w = wab * trapezoid_weight(c, n);
                    const double d = f_hat.values[i] - f_true.values[i];
                    num += w * d * d;
                    den += w * f_true.values[i] * f_true.values[i];
                }
            }
        }
    }
    if (den == 0.0) throw std::invalid_argument("reference field is zero");
    return std::sqrt(num / den);
}

ErrorReport error_report(std::span<const VolumeField> iterates, const VolumeField& truth) {
    ErrorReport rep;
    for (const auto& f : iterates) {
        rep.rel_l2.push_back(rel_error(f, truth, Norm::l2));
        rep.rel_linf.push_back(rel_error(f, truth, Norm::linf));
    }
    return rep;
}

std::vector<std::pair<double, double>> line_profile(const VolumeField& f, const LineSpec& line) {
    const Grid& grid = f.grid;
    if (line.axis < 0 || line.axis >= grid.dim)
        throw std::invalid_argument("line axis out of range");
    int fixed[2] = {0, 0};
    for (int i = 0; i < grid.dim - 1; ++i) fixed[i] = node_index(line.fixed[i], grid);

    std::vector<std::pair<double, double>> out;
    out.reserve(grid.n_nodes);
    for (int j = 0; j < grid.n_nodes; ++j) {
        int idx[3] = {0, 0, 0};
        idx[line.axis] = j;
        int pos = 0;
        for (int a = 0; a < grid.dim; ++a) {
            if (a == line.axis) continue;
            idx[a] = fixed[pos++];
        }
        const double v = grid.dim == 2 ? f.at(idx[0], idx[1]) : f.at(idx[0], idx[1], idx[2]);
        out.emplace_back(grid.node(j), v);
    }
    return out;
}

}  // namespace rcav
