#include "rcav/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "rcav/config.hpp"
#include "rcav/forward.hpp"
#include "rcav/inversion.hpp"
#include "rcav/io.hpp"
#include "rcav/metrics.hpp"
#include "rcav/phantom.hpp"
#include "rcav/spectral.hpp"
#include "rcav/window.hpp"

namespace rcav::cli {

namespace {

struct Overrides {
    std::optional<std::string> backend;
    std::optional<int> trunc;
    std::optional<int> iterations;
    std::optional<bool> six_face;
    std::optional<double> noise_level;
    std::optional<std::uint64_t> seed;
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--backend", ov.backend, "direct|fast (overrides config)");
    cmd->add_option("--trunc", ov.trunc, "modes per axis (overrides config)");
    cmd->add_option("--iterations", ov.iterations, "iteration count (overrides config)");
    cmd->add_option("--six-face", ov.six_face, "use all faces (overrides config)");
}

RunConfig load_with_overrides(const std::string& path, const Overrides& ov) {
    RunConfig cfg = load_run_config(path);
    if (ov.backend) cfg.recon.backend = parse_backend(*ov.backend);
    if (ov.trunc) cfg.recon.trunc = *ov.trunc;
    if (ov.iterations) cfg.recon.iterations = *ov.iterations;
    if (ov.six_face) cfg.recon.six_face = *ov.six_face;
    if (ov.noise_level) cfg.noise_level = *ov.noise_level;
    if (ov.seed) cfg.noise_seed = *ov.seed;
    cfg.recon.validate();
    return cfg;
}

// "x2=0.25,x3=0.25": fixed coordinates; the unmentioned axis is the free one
LineSpec parse_line_spec(const std::string& s, int dim) {
    bool fixed_axis[3] = {false, false, false};
    double fixed_val[3] = {0.0, 0.0, 0.0};
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos || part.size() < 4 || part[0] != 'x')
            throw std::runtime_error("bad line spec '" + s + "' (expected e.g. x2=0.25)");
        const int axis = std::stoi(part.substr(1, eq - 1)) - 1;
        if (axis < 0 || axis >= dim) throw std::runtime_error("line axis out of range in '" + s + "'");
        fixed_axis[axis] = true;
        fixed_val[axis] = std::stod(part.substr(eq + 1));
    }
    LineSpec line;
    int free_count = 0, pos = 0;
    for (int a = 0; a < dim; ++a) {
        if (!fixed_axis[a]) {
            line.axis = a;
            ++free_count;
        }
    }
    if (free_count != 1)
        throw std::runtime_error("line spec '" + s + "' must fix all but one axis");
    for (int a = 0; a < dim; ++a)
        if (a != line.axis) line.fixed[pos++] = fixed_val[a];
    return line;
}

// "x3=0.25" -> (axis, node index)
std::pair<int, int> parse_slice_spec(const std::string& s, const Grid& grid) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || s.size() < 4 || s[0] != 'x')
        throw std::runtime_error("bad slice spec '" + s + "' (expected e.g. x3=0.25)");
    const int axis = std::stoi(s.substr(1, eq - 1)) - 1;
    if (axis < 0 || axis >= grid.dim)
        throw std::runtime_error("slice axis out of range in '" + s + "'");
    const double coord = std::stod(s.substr(eq + 1));
    const double x = coord / grid.h();
    const int node = static_cast<int>(std::lround(x));
    if (node < 0 || node >= grid.n_nodes || std::abs(x - node) > 1e-9)
        throw std::runtime_error("slice coordinate in '" + s + "' is not a grid node");
    return {axis, node};
}

void warn_ball_fit(const std::vector<BallSpec>& balls, const Grid& grid) {
    for (std::size_t i = 0; i < balls.size(); ++i) {
        const BallSpec& b = balls[i];
        const double eps = b.smoothing > 0.0 ? b.smoothing : 2.0 * grid.h();
        double margin = 1.0;
        for (int a = 0; a < grid.dim; ++a)
            margin = std::min({margin, b.center[a], 1.0 - b.center[a]});
        if (b.radius + eps >= margin)
            std::fprintf(stderr,
                         "warning: ball %zu (radius %.3g + smoothing %.3g) reaches within "
                         "%.3g of the boundary\n",
                         i, b.radius, eps, margin);
    }
}

int cmd_phantom(const std::string& config_path, const Overrides& ov, const std::string& out) {
    const RunConfig cfg = load_with_overrides(config_path, ov);
    const auto balls = cfg.resolved_balls();
    warn_ball_fit(balls, cfg.recon.grid);
    write_volume(out, ball_phantom(balls, cfg.recon.grid));
    return 0;
}

int cmd_forward(const std::string& config_path, const Overrides& ov, const std::string& in,
                const std::string& out) {
    const RunConfig cfg = load_with_overrides(config_path, ov);
    VolumeField f = read_volume(in);
    if (f.grid.dim != cfg.recon.grid.dim || f.grid.n_nodes != cfg.recon.grid.n_nodes)
        throw std::runtime_error("volume '" + in + "' does not match the configured grid");
    f.grid = cfg.recon.grid;  // attach the time axis
    BoundarySeries g = simulate_boundary(f, cfg.recon);
    if (cfg.noise_level > 0.0) g = add_noise(g, cfg.noise_level, cfg.noise_seed);
    write_boundary(out, g);
    return 0;
}

int cmd_reconstruct(const std::string& config_path, const Overrides& ov, const std::string& in,
                    const std::string& prefix, const std::string& truth_path) {
    const RunConfig cfg = load_with_overrides(config_path, ov);
    const BoundarySeries g = read_boundary(in, cfg.recon.grid.dt);
    if (!(g.grid == cfg.recon.grid))
        throw std::runtime_error("boundary data '" + in + "' does not match the configured grid");
    const WindowTable w = make_window_for(cfg.recon);

    std::vector<VolumeField> results;
    std::vector<std::string> names;
    if (cfg.recon.six_face) {
        results.push_back(six_face_reconstruct(g, cfg.recon, w));
        names.push_back(prefix + "_sixface.rcvol");
    } else {
        auto iterates = reconstruct(g, cfg.recon, w);
        for (std::size_t k = 0; k < iterates.size(); ++k)
            names.push_back(prefix + "_iter" + std::to_string(k) + ".rcvol");
        results = std::move(iterates);
    }
    for (std::size_t k = 0; k < results.size(); ++k) write_volume(names[k], results[k]);

    if (!truth_path.empty()) {
        VolumeField truth = read_volume(truth_path);
        truth.grid = cfg.recon.grid;
        for (auto& r : results) r.grid = cfg.recon.grid;
        const ErrorReport rep = error_report(results, truth);
        write_error_csv(prefix + "_errors.csv", rep);
        for (std::size_t k = 0; k < rep.rel_l2.size(); ++k)
            std::printf("%s: rel_l2 = %.6g, rel_linf = %.6g\n", names[k].c_str(), rep.rel_l2[k],
                        rep.rel_linf[k]);
    }
    return 0;
}

int cmd_bound(const std::string& config_path, const Overrides& ov) {
    const RunConfig cfg = load_with_overrides(config_path, ov);
    const WindowTable w = make_window_for(cfg.recon);
    const ContractionReport rep = contraction_bound(cfg.recon, w);
    const double t_suff = sufficient_T(w, cfg.recon.grid.dim);
    std::printf("window %s: eta_hat(0) = %.6g, B = %.6g\n", cfg.recon.window.kind.c_str(),
                w.hat_zero, w.B);
    std::printf("measured |A|_inf (trunc %d) = %.6g\n", cfg.recon.resolved_trunc(),
                rep.measured_norm);
    std::printf("lemma bound at T = %g: %.6g\n", cfg.recon.grid.T(), rep.lemma_bound);
    std::printf("sufficient T: %.6g\n", t_suff);
    std::printf("contraction (measured < 1): %s\n", rep.measured_norm < 1.0 ? "yes" : "no");
    return 0;
}

int cmd_metrics(const std::string& truth_path, const std::string& estimate_path,
                const std::string& profile_path, const std::string& line_spec,
                const std::string& slice_path, const std::string& slice_spec) {
    const VolumeField truth = read_volume(truth_path);
    VolumeField est = read_volume(estimate_path);
    if (!(est.grid == truth.grid))
        throw std::runtime_error("truth and estimate grids differ");
    std::printf("rel_l2 = %.9g\nrel_linf = %.9g\n", rel_error(est, truth, Norm::l2),
                rel_error(est, truth, Norm::linf));

    if (!profile_path.empty()) {
        const LineSpec line = parse_line_spec(line_spec, est.grid.dim);
        write_profile_csv(profile_path, line_profile(est, line));
    }
    if (!slice_path.empty()) {
        int axis = 0, node = 0;
        if (est.grid.dim == 3) {
            if (slice_spec.empty())
                throw std::runtime_error("--slice-plane is required for 3D volumes");
            std::tie(axis, node) = parse_slice_spec(slice_spec, est.grid);
        }
        write_pgm_slice(slice_path, est, axis, node);
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
    CLI::App app{"forward simulation and reconstruction in a reverberant rectangular cavity"};
    app.require_subcommand(1);

    std::string config_path, in_path, out_path, prefix, truth_path;
    std::string profile_path, line_spec, slice_path, slice_spec, estimate_path;
    Overrides ov;

    auto* ph = app.add_subcommand("phantom", "sample the configured phantom to a volume file");
    ph->add_option("-c,--config", config_path, "run configuration")->required();
    ph->add_option("-o,--out", out_path, "output volume file")->required();
    add_override_flags(ph, ov);

    auto* fw = app.add_subcommand("forward", "simulate boundary data for a volume");
    fw->add_option("-c,--config", config_path)->required();
    fw->add_option("-i,--in", in_path, "input volume file")->required();
    fw->add_option("-o,--out", out_path, "output boundary file")->required();
    fw->add_option("--noise-level", ov.noise_level, "L2 noise fraction (1 = 100%)");
    fw->add_option("--seed", ov.seed, "noise seed");
    add_override_flags(fw, ov);

    auto* rc = app.add_subcommand("reconstruct", "reconstruct iterates from boundary data");
    rc->add_option("-c,--config", config_path)->required();
    rc->add_option("-i,--in", in_path, "input boundary file")->required();
    rc->add_option("-o,--out-prefix", prefix, "output file prefix")->required();
    rc->add_option("--truth", truth_path, "ground-truth volume for an error table");
    add_override_flags(rc, ov);

    auto* bd = app.add_subcommand("bound", "print the contraction bound report");
    bd->add_option("-c,--config", config_path)->required();
    add_override_flags(bd, ov);

    auto* mt = app.add_subcommand("metrics", "compare an estimate against ground truth");
    mt->add_option("--truth", truth_path)->required();
    mt->add_option("--estimate", estimate_path)->required();
    mt->add_option("--profile", profile_path, "write a line profile CSV");
    mt->add_option("--line", line_spec, "profile line, e.g. x2=0.25,x3=0.25");
    mt->add_option("--slice", slice_path, "write an 8-bit PGM slice");
    mt->add_option("--slice-plane", slice_spec, "slice plane for 3D, e.g. x3=0.25");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (ph->parsed()) return cmd_phantom(config_path, ov, out_path);
        if (fw->parsed()) return cmd_forward(config_path, ov, in_path, out_path);
        if (rc->parsed()) return cmd_reconstruct(config_path, ov, in_path, prefix, truth_path);
        if (bd->parsed()) return cmd_bound(config_path, ov);
        if (mt->parsed())
            return cmd_metrics(truth_path, estimate_path, profile_path, line_spec, slice_path,
                               slice_spec);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "rcav: error: %s\n", e.what());
        return 1;
    }
    return 1;
}

}  // namespace rcav::cli
