#pragma once
#include <stdexcept>
#include <string>

namespace glsf {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A physical or configuration parameter is outside its admissible domain.
// The message names the offending field.
struct ParamDomainError : Error {
    explicit ParamDomainError(const std::string& what) : Error(what) {}
};

// Two fields (or a field and an operator) live on different grids.
struct GridMismatchError : Error {
    explicit GridMismatchError(const std::string& what) : Error(what) {}
};

// An iterative linear solve did not reach its tolerance.
struct SolverError : Error {
    SolverError(const std::string& what, double achieved_residual)
        : Error(what), residual(achieved_residual) {}
    double residual;
};

// A time step produced non-finite values; carries the last good time.
struct SimulationAborted : Error {
    SimulationAborted(const std::string& what, double last_good_time, long last_good_step)
        : Error(what), t_last_good(last_good_time), step_last_good(last_good_step) {}
    double t_last_good;
    long step_last_good;
};

// Malformed snapshot or series file.
struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error(what) {}
};

} // namespace glsf
