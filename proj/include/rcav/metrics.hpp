#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rcav/types.hpp"

namespace rcav {

enum class Norm { l2, linf };

/// ||f_hat - f_true|| / ||f_true||. The discrete L2 uses trapezoid node
/// weights (boundary-inclusive grid); Linf is the plain node maximum.
/// Throws if ||f_true|| = 0.
double rel_error(const VolumeField& f_hat, const VolumeField& f_true, Norm norm);

struct ErrorReport {
    std::vector<double> rel_l2;
    std::vector<double> rel_linf;
};

ErrorReport error_report(std::span<const VolumeField> iterates, const VolumeField& truth);

/// Axis-aligned line through grid nodes: the free axis varies, the other
/// coordinates are fixed (ascending axis order, dim-1 entries used).
struct LineSpec {
    int axis = 0;
    std::array<double, 2> fixed{0.25, 0.25};
};

/// (coordinate, value) samples of f along the line. The fixed coordinates
/// must lie on grid nodes.
std::vector<std::pair<double, double>> line_profile(const VolumeField& f, const LineSpec& line);

}  // namespace rcav
