#include "rcav/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rcav {

namespace {

static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; byte swapping is not implemented");

void write_doubles(std::ofstream& out, const std::vector<double>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void read_doubles(std::ifstream& in, std::vector<double>& v) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!in) throw std::runtime_error("unexpected end of file while reading samples");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

std::string read_line(std::ifstream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("truncated header in '" + path + "'");
    return line;
}

}  // namespace

void write_volume(const std::string& path, const VolumeField& f) {
    auto out = open_out(path);
    out << "RCVOL 1\n" << f.grid.dim << " " << f.grid.n_nodes << "\n";
    write_doubles(out, f.values);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

VolumeField read_volume(const std::string& path) {
    auto in = open_in(path);
    if (read_line(in, path) != "RCVOL 1")
        throw std::runtime_error("'" + path + "' is not a volume file (bad magic)");
    std::istringstream hdr(read_line(in, path));
    Grid grid;
    if (!(hdr >> grid.dim >> grid.n_nodes) || (grid.dim != 2 && grid.dim != 3) ||
        grid.n_nodes < 3)
        throw std::runtime_error("bad volume header in '" + path + "'");
    VolumeField f;
    f.grid = grid;
    f.values.resize(grid.n_volume());
    read_doubles(in, f.values);
    return f;
}

void write_boundary(const std::string& path, const BoundarySeries& g) {
    auto out = open_out(path);
    out << "RCBND 1\n"
        << g.grid.dim << " " << g.grid.n_nodes << " " << g.grid.n_time << " " << g.faces.size()
        << "\n";
    for (std::size_t i = 0; i < g.faces.size(); ++i) {
        out << face_tag(g.faces[i]) << "\n";
        write_doubles(out, g.data[i]);
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

BoundarySeries read_boundary(const std::string& path, double dt) {
    auto in = open_in(path);
    if (read_line(in, path) != "RCBND 1")
        throw std::runtime_error("'" + path + "' is not a boundary file (bad magic)");
    std::istringstream hdr(read_line(in, path));
    int dim = 0, n_nodes = 0, n_time = 0, n_faces = 0;
    if (!(hdr >> dim >> n_nodes >> n_time >> n_faces) || (dim != 2 && dim != 3) || n_nodes < 3 ||
        n_time < 2 || n_faces < 1)
        throw std::runtime_error("bad boundary header in '" + path + "'");
    BoundarySeries g;
    g.grid = Grid{dim, n_nodes, dt, n_time};
    for (int i = 0; i < n_faces; ++i) {
        const Face f = parse_face_tag(read_line(in, path));
        g.add_face(f);
        read_doubles(in, g.face_data(f));
    }
    return g;
}

void write_pgm_slice(const std::string& path, const VolumeField& f, int slice_axis,
                     int slice_node) {
    const Grid& grid = f.grid;
    const int n = grid.n_nodes;
    if (grid.dim == 3) {
        if (slice_axis < 0 || slice_axis >= 3) throw std::invalid_argument("bad slice axis");
        if (slice_node < 0 || slice_node >= n) throw std::invalid_argument("bad slice node");
    }

    std::vector<double> plane;
    plane.reserve(static_cast<std::size_t>(n) * n);
    if (grid.dim == 2) {
        plane = f.values;
    } else {
        int idx[3];
        idx[slice_axis] = slice_node;
        int free_axes[2], pos = 0;
        for (int a = 0; a < 3; ++a)
            if (a != slice_axis) free_axes[pos++] = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                idx[free_axes[0]] = i;
                idx[free_axes[1]] = j;
                plane.push_back(f.at(idx[0], idx[1], idx[2]));
            }
    }

    const auto [mn_it, mx_it] = std::minmax_element(plane.begin(), plane.end());
    const double mn = *mn_it, mx = *mx_it;
    const double span = mx - mn;

    auto out = open_out(path);
    out << "P5\n" << n << " " << n << "\n255\n";
    for (double v : plane) {
        const double u = span > 0.0 ? (v - mn) / span : 0.0;
        out.put(static_cast<char>(static_cast<unsigned char>(std::lround(u * 255.0))));
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_profile_csv(const std::string& path,
                       const std::vector<std::pair<double, double>>& profile) {
    auto out = open_out(path);
    out << "coordinate,value\n";
    out.precision(17);
    for (const auto& [x, v] : profile) out << x << "," << v << "\n";
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_error_csv(const std::string& path, const ErrorReport& report) {
    auto out = open_out(path);
    out << "iter,rel_l2,rel_linf\n";
    out.precision(17);
    for (std::size_t i = 0; i < report.rel_l2.size(); ++i)
        out << i << "," << report.rel_l2[i] << "," << report.rel_linf[i] << "\n";
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace rcav
