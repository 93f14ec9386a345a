#include "glsf/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace glsf {

const char* to_string(Experiment e) {
    switch (e) {
        case Experiment::simulate: return "simulate";
        case Experiment::stationary: return "stationary";
        case Experiment::split: return "split";
        case Experiment::qcheck: return "qcheck";
        case Experiment::depcheck: return "depcheck";
        case Experiment::oracle: return "oracle";
    }
    return "?";
}

const char* to_string(Scheme s) { return s == Scheme::imex ? "imex" : "explicit-euler"; }

Scheme RunConfig::scheme_enum() const {
    return scheme == "imex" ? Scheme::imex : Scheme::explicit_euler;
}

Grid2D RunConfig::make_grid() const { return Grid2D(nx, ny, lx, ly); }

PhysicalParams RunConfig::make_params() const { return derive_params(gamma, kappa, mu, c0, k0); }

BoundaryData RunConfig::make_boundary(const Grid2D& grid) const {
    VectorField gf(grid);
    if (g == "swirl") gf = swirl_body_force(grid, g_amp);

    BoundaryValueFn ub;
    if (u_b == "xramp") {
        ub = [](double x, double) { return x; };
    } else {
        const double c = std::stod(u_b);
        ub = [c](double, double) { return c; };
    }
    if (omega == 0.0 && g == "zero" && u_b != "xramp" && std::stod(u_b) == 0.0) {
        return zero_boundary_data(grid);
    }
    return make_boundary_data(grid, omega, ub, gf);
}

State RunConfig::make_initial_state(const Grid2D& grid) const {
    if (z0 == "zero") return State(grid);
    if (z0 == "one") return uniform_state(grid, cplx(1.0, 0.0));
    if (z0 == "half") return uniform_state(grid, cplx(0.5, 0.0));
    return random_smooth_state(grid, seed, z0_norm);
}

namespace {

struct Parser {
    std::vector<std::string> errors;

    void fail(int line, const std::string& msg) {
        errors.push_back("line " + std::to_string(line) + ": " + msg);
    }

    bool parse_double(int line, const std::string& key, const std::string& val, double& out) {
        try {
            std::size_t pos = 0;
            out = std::stod(val, &pos);
            if (pos != val.size()) throw std::invalid_argument("trailing");
            return true;
        } catch (...) {
            fail(line, "key '" + key + "': expected a real number, got '" + val + "'");
            return false;
        }
    }

    bool parse_int(int line, const std::string& key, const std::string& val, long long& out) {
        try {
            std::size_t pos = 0;
            out = std::stoll(val, &pos);
            if (pos != val.size()) throw std::invalid_argument("trailing");
            return true;
        } catch (...) {
            fail(line, "key '" + key + "': expected an integer, got '" + val + "'");
            return false;
        }
    }
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool is_number(const std::string& s) {
    try {
        std::size_t pos = 0;
        (void)std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

} // namespace

ParseOutcome parse_config(const std::string& text) {
    ParseOutcome out;
    RunConfig c;
    Parser p;
    std::map<std::string, int> seen;
    bool have_experiment = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            p.fail(lineno, "expected 'key = value', got '" + trim(raw) + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) {
            p.fail(lineno, "empty key or value");
            continue;
        }
        if (seen.count(key)) {
            p.fail(lineno, "duplicate key '" + key + "' (first set on line " +
                               std::to_string(seen[key]) + ")");
            continue;
        }
        seen[key] = lineno;

        long long iv = 0;
        double dv = 0.0;
        if (key == "experiment") {
            have_experiment = true;
            if (val == "simulate") c.experiment = Experiment::simulate;
            else if (val == "stationary") c.experiment = Experiment::stationary;
            else if (val == "split") c.experiment = Experiment::split;
            else if (val == "qcheck") c.experiment = Experiment::qcheck;
            else if (val == "depcheck") c.experiment = Experiment::depcheck;
            else if (val == "oracle") c.experiment = Experiment::oracle;
            else p.fail(lineno, "unknown experiment '" + val + "'");
        } else if (key == "nx" || key == "ny" || key == "record_every" || key == "runs") {
            if (p.parse_int(lineno, key, val, iv)) {
                if (key == "nx") c.nx = static_cast<int>(iv);
                else if (key == "ny") c.ny = static_cast<int>(iv);
                else if (key == "record_every") c.record_every = static_cast<int>(iv);
                else c.runs = static_cast<int>(iv);
            }
        } else if (key == "seed") {
            if (p.parse_int(lineno, key, val, iv)) {
                if (iv < 0) p.fail(lineno, "seed must be nonnegative");
                else c.seed = static_cast<std::uint64_t>(iv);
            }
        } else if (key == "lx" || key == "ly" || key == "gamma" || key == "kappa" ||
                   key == "mu" || key == "c0" || key == "k0" || key == "omega" ||
                   key == "g_amp" || key == "dt" || key == "t_final" || key == "z0_norm" ||
                   key == "tol" || key == "t_star" || key == "perturbation" ||
                   key == "euler_dt") {
            if (p.parse_double(lineno, key, val, dv)) {
                if (key == "lx") c.lx = dv;
                else if (key == "ly") c.ly = dv;
                else if (key == "gamma") c.gamma = dv;
                else if (key == "kappa") c.kappa = dv;
                else if (key == "mu") c.mu = dv;
                else if (key == "c0") c.c0 = dv;
                else if (key == "k0") c.k0 = dv;
                else if (key == "omega") c.omega = dv;
                else if (key == "g_amp") c.g_amp = dv;
                else if (key == "dt") c.dt = dv;
                else if (key == "t_final") c.t_final = dv;
                else if (key == "z0_norm") c.z0_norm = dv;
                else if (key == "tol") c.tol = dv;
                else if (key == "t_star") c.t_star = dv;
                else if (key == "perturbation") c.perturbation = dv;
                else c.euler_dt = dv;
            }
        } else if (key == "scheme") {
            if (val == "imex" || val == "explicit-euler") c.scheme = val;
            else p.fail(lineno, "scheme must be 'imex' or 'explicit-euler', got '" + val + "'");
        } else if (key == "u_b") {
            if (val == "xramp" || is_number(val)) c.u_b = val;
            else p.fail(lineno, "u_b must be a real constant or 'xramp', got '" + val + "'");
        } else if (key == "g") {
            if (val == "zero" || val == "swirl") c.g = val;
            else p.fail(lineno, "g must be 'zero' or 'swirl', got '" + val + "'");
        } else if (key == "z0") {
            if (val == "random" || val == "zero" || val == "one" || val == "half") c.z0 = val;
            else p.fail(lineno, "z0 must be one of random/zero/one/half, got '" + val + "'");
        } else if (key == "out") {
            c.out = val;
        } else {
            p.fail(lineno, "unknown key '" + key + "'");
        }
    }

    if (!have_experiment) p.errors.push_back("missing required key 'experiment'");

    // range validation
    auto range_fail = [&](const std::string& msg) { p.errors.push_back("range: " + msg); };
    if (c.nx < 4 || c.ny < 4) range_fail("nx, ny must be >= 4");
    if (!(c.lx > 0.0) || !(c.ly > 0.0)) range_fail("lx, ly must be positive");
    if (!(c.gamma > 0.0)) range_fail("gamma must be positive");
    if (!(c.kappa > 0.0)) range_fail("kappa must be positive");
    if (!(c.mu > 0.0)) range_fail("mu must be positive");
    if (!(c.c0 > 0.0)) range_fail("c0 must be positive");
    if (!(c.k0 > 0.0)) range_fail("k0 must be positive");
    if (!(c.dt > 0.0)) range_fail("dt must be positive");
    if (!(c.t_final > 0.0)) range_fail("t_final must be positive");
    if (c.record_every < 1) range_fail("record_every must be >= 1");
    if (!(c.z0_norm >= 0.0)) range_fail("z0_norm must be nonnegative");
    if (!(c.tol > 0.0)) range_fail("tol must be positive");
    if (!(c.t_star > 0.0)) range_fail("t_star must be positive");
    if (c.runs < 1) range_fail("runs must be >= 1");
    if (!(c.perturbation > 0.0)) range_fail("perturbation must be positive");
    if (!(c.euler_dt > 0.0)) range_fail("euler_dt must be positive");

    out.errors = std::move(p.errors);
    if (out.errors.empty()) out.config = c;
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string serialize_config(const RunConfig& c) {
    std::ostringstream s;
    s << "experiment = " << to_string(c.experiment) << "\n";
    s << "nx = " << c.nx << "\n";
    s << "ny = " << c.ny << "\n";
    s << "lx = " << fmt(c.lx) << "\n";
    s << "ly = " << fmt(c.ly) << "\n";
    s << "gamma = " << fmt(c.gamma) << "\n";
    s << "kappa = " << fmt(c.kappa) << "\n";
    s << "mu = " << fmt(c.mu) << "\n";
    s << "c0 = " << fmt(c.c0) << "\n";
    s << "k0 = " << fmt(c.k0) << "\n";
    s << "omega = " << fmt(c.omega) << "\n";
    s << "u_b = " << c.u_b << "\n";
    s << "g = " << c.g << "\n";
    s << "g_amp = " << fmt(c.g_amp) << "\n";
    s << "dt = " << fmt(c.dt) << "\n";
    s << "scheme = " << c.scheme << "\n";
    s << "t_final = " << fmt(c.t_final) << "\n";
    s << "record_every = " << c.record_every << "\n";
    s << "z0 = " << c.z0 << "\n";
    s << "z0_norm = " << fmt(c.z0_norm) << "\n";
    s << "tol = " << fmt(c.tol) << "\n";
    s << "t_star = " << fmt(c.t_star) << "\n";
    s << "runs = " << c.runs << "\n";
    s << "perturbation = " << fmt(c.perturbation) << "\n";
    s << "euler_dt = " << fmt(c.euler_dt) << "\n";
    s << "seed = " << c.seed << "\n";
    s << "out = " << c.out << "\n";
    return s.str();
}

} // namespace glsf
