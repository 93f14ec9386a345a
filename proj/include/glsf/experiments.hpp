#pragma once
#include "glsf/config.hpp"
#include "glsf/snapshot.hpp"

namespace glsf {

struct ReportLine {
    enum class Kind { pass, fail, metric } kind;
    std::string text;
};

struct RunOutcome {
    int exit_code = 0;
    std::vector<ReportLine> lines;
};

// Executes the configured experiment, writing series.csv, snapshots and
// report.txt into cfg.out. Deterministic given (config, seed). Returns
// nonzero when any check fails; partial artifacts are kept on error.
RunOutcome run_experiment(const RunConfig& cfg);

void write_series_csv(const std::string& path, const std::vector<TrajectoryRecord>& records);

// `glsf <experiment> --config <path> [--out <dir>] [--seed <n>]`
int run_cli(int argc, char** argv);

} // namespace glsf
