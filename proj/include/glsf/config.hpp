#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glsf/dynamics.hpp"

namespace glsf {

enum class Experiment { simulate, stationary, split, qcheck, depcheck, oracle };

const char* to_string(Experiment e);
const char* to_string(Scheme s);

// Flat `key = value` run configuration. Unknown keys are rejected; parsing
// collects every error (with line numbers) instead of stopping at the first.
struct RunConfig {
    Experiment experiment = Experiment::simulate;

    int nx = 32, ny = 32;
    double lx = 1.0, ly = 1.0;

    double gamma = 1.0, kappa = 2.0, mu = 1.0, c0 = 1.0, k0 = 1.0;

    double omega = 0.0;
    std::string u_b = "0";     // a real constant or the profile name "xramp"
    std::string g = "zero";    // "zero" or "swirl"
    double g_amp = 1.0;

    double dt = 1e-3;
    std::string scheme = "imex";  // "imex" or "explicit-euler"
    double t_final = 1.0;
    int record_every = 10;

    std::string z0 = "random";  // "random", "zero", "one", "half"
    double z0_norm = 1.0;

    double tol = 3e-7;        // stationary experiment
    double t_star = 2.0;      // split experiment
    int runs = 5;             // corpus experiments
    double perturbation = 1e-6;  // depcheck
    double euler_dt = 1e-6;      // oracle experiment substep

    std::uint64_t seed = 1;
    std::string out = "out";

    Scheme scheme_enum() const;
    Grid2D make_grid() const;
    PhysicalParams make_params() const;
    BoundaryData make_boundary(const Grid2D& grid) const;
    State make_initial_state(const Grid2D& grid) const;
};

struct ParseOutcome {
    std::optional<RunConfig> config;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty() && config.has_value(); }
};

ParseOutcome parse_config(const std::string& text);

// canonical text form; parse(serialize(parse(x))) == parse(x)
std::string serialize_config(const RunConfig& c);

} // namespace glsf
