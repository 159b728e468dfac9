#include "rcav/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rcav/window.hpp"

namespace rcav {

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

class Keys {
  public:
    Keys(std::string name) : name_(std::move(name)) {}

    void insert(const std::string& key, const std::string& value, int line) {
        if (entries_.count(key)) fail(name_, line, "duplicate key '" + key + "'");
        entries_[key] = {value, line};
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    template <typename F>
    bool take(const std::string& key, F&& parse) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return false;
        try {
            parse(it->second.value);
        } catch (const std::exception& e) {
            fail(name_, it->second.line, std::string("bad value for '") + key + "': " + e.what());
        }
        entries_.erase(it);
        return true;
    }

    void finish() const {
        if (!entries_.empty()) {
            const auto& [key, entry] = *entries_.begin();
            fail(name_, entry.line, "unknown key '" + key + "'");
        }
    }

    const std::string& name() const { return name_; }

  private:
    std::string name_;
    std::map<std::string, Entry> entries_;
};

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::invalid_argument("expected true|false");
}

BallSpec parse_ball(const std::string& s, int dim) {
    std::istringstream is(s);
    std::vector<double> nums;
    double v;
    while (is >> v) nums.push_back(v);
    if (!is.eof()) throw std::invalid_argument("non-numeric ball entry");
    const std::size_t base = static_cast<std::size_t>(dim) + 2;
    if (nums.size() != base && nums.size() != base + 1)
        throw std::invalid_argument("expected 'cx cy" + std::string(dim == 3 ? " cz" : "") +
                                    " radius amplitude [smoothing]'");
    BallSpec b;
    for (int a = 0; a < dim; ++a) b.center[a] = nums[a];
    b.radius = nums[dim];
    b.amplitude = nums[dim + 1];
    b.smoothing = nums.size() == base + 1 ? nums[base] : 0.0;
    if (!(b.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
    if (b.smoothing < 0.0) throw std::invalid_argument("ball smoothing must be nonnegative");
    return b;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& name) {
    Keys keys(name);
    std::vector<std::pair<std::string, int>> ball_lines;

    std::istringstream in(text);
    std::string raw, section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(name, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "grid" && section != "window" && section != "phantom" &&
                section != "recon" && section != "noise")
                fail(name, line_no, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(name, line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(name, line_no, "empty key");
        if (key.find('.') == std::string::npos && !section.empty() && section != "grid" &&
            section != "recon")
            key = section + "." + key;
        if (key == "phantom.ball" || key == "ball") {
            ball_lines.emplace_back(value, line_no);
            continue;
        }
        keys.insert(key, value, line_no);
    }

    RunConfig cfg;
    Grid& grid = cfg.recon.grid;
    grid = Grid{};
    grid.n_nodes = 0;

    keys.take("dim", [&](const std::string& v) { grid.dim = static_cast<int>(parse_long(v)); });
    if (grid.dim != 2 && grid.dim != 3)
        throw std::runtime_error(name + ": dim must be 2 or 3 (got " + std::to_string(grid.dim) +
                                 ")");
    keys.take("n_nodes",
              [&](const std::string& v) { grid.n_nodes = static_cast<int>(parse_long(v)); });
    if (grid.n_nodes < 3) throw std::runtime_error(name + ": n_nodes must be at least 3");

    double T = -1.0;
    bool have_dt = false, have_nt = false;
    keys.take("dt", [&](const std::string& v) {
        grid.dt = parse_double(v);
        have_dt = true;
    });
    keys.take("n_time", [&](const std::string& v) {
        grid.n_time = static_cast<int>(parse_long(v));
        have_nt = true;
    });
    keys.take("T", [&](const std::string& v) { T = parse_double(v); });
    if (!have_dt) grid.dt = grid.h();
    if (!(grid.dt > 0.0)) throw std::runtime_error(name + ": dt must be positive");
    if (!have_nt) {
        if (T < 0.0) T = 2.0;
        grid.n_time = static_cast<int>(std::lround(T / grid.dt)) + 1;
    }
    if (grid.n_time < 2) throw std::runtime_error(name + ": n_time must be at least 2");
    if (T >= 0.0 && std::abs(grid.T() - T) > 1e-9 * std::max(1.0, T))
        throw std::runtime_error(name + ": inconsistent time axis: T = " + std::to_string(T) +
                                 " but (n_time-1)*dt = " + std::to_string(grid.T()));

    keys.take("window.kind", [&](const std::string& v) {
        parse_window_kind(v);  // validate now, store the name
        cfg.recon.window.kind = v;
    });
    keys.take("window.oversample", [&](const std::string& v) {
        cfg.recon.window.oversample = static_cast<int>(parse_long(v));
    });

    keys.take("trunc",
              [&](const std::string& v) { cfg.recon.trunc = static_cast<int>(parse_long(v)); });
    keys.take("iterations", [&](const std::string& v) {
        cfg.recon.iterations = static_cast<int>(parse_long(v));
    });
    keys.take("freq_oversample", [&](const std::string& v) {
        cfg.recon.freq_oversample = static_cast<int>(parse_long(v));
    });
    keys.take("backend",
              [&](const std::string& v) { cfg.recon.backend = parse_backend(v); });
    keys.take("six_face",
              [&](const std::string& v) { cfg.recon.six_face = parse_bool(v); });
    keys.take("stop_on_residual_growth", [&](const std::string& v) {
        cfg.recon.stop_on_residual_growth = parse_bool(v);
    });
    keys.take("faces", [&](const std::string& v) {
        std::istringstream is(v);
        std::string tag;
        while (is >> tag) cfg.recon.faces.push_back(parse_face_tag(tag));
        if (cfg.recon.faces.empty()) throw std::invalid_argument("empty face list");
    });

    keys.take("noise.level", [&](const std::string& v) {
        cfg.noise_level = parse_double(v);
        if (cfg.noise_level < 0.0) throw std::invalid_argument("must be nonnegative");
    });
    keys.take("noise.seed", [&](const std::string& v) {
        cfg.noise_seed = static_cast<std::uint64_t>(parse_long(v));
    });

    keys.finish();

    for (const auto& [value, line] : ball_lines) {
        try {
            cfg.balls.push_back(parse_ball(value, grid.dim));
        } catch (const std::exception& e) {
            fail(name, line, std::string("bad ball entry: ") + e.what());
        }
    }

    try {
        cfg.recon.validate();
    } catch (const std::exception& e) {
        throw std::runtime_error(name + ": " + e.what());
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str(), path);
}

}  // namespace rcav
