#pragma once

#include "kleinlab/units.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace kleinlab::cli {

enum class Scale { linear, logarithmic };

// One parameter sweep over a registered target quantity.
struct SweepSpec {
    std::string target;
    std::map<std::string, double> fixed;
    std::string sweep_param;
    double start = 0.0;
    double stop = 0.0;
    long count = 1;
    Scale scale = Scale::linear;
    std::string out = "-";
    std::string format = "csv";
    int jobs = 0; // 0 = KLEINLAB_JOBS env or hardware
    double mass = 1.0;
    double tol = 1e-10;
};

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                      : what) {}
};

// key=value file, '#' comments; unknown keys are rejected (with their line)
// once validated against the target's parameter list.
SweepSpec load_config(const std::string& path);

struct TargetSpec {
    std::vector<std::string> input_names;     // parameter names, column order
    std::vector<std::string> input_columns;   // annotated input headers
    std::vector<std::string> output_columns;  // annotated output headers
    std::map<std::string, double> defaults;   // optional parameters
    std::set<std::string> allow_missing;      // optional without a default
    // evaluate one point; throws DomainError for out-of-domain rows
    std::vector<std::string> (*eval)(const std::map<std::string, double>&,
                                     const UnitSystem&, double tol);
};

const std::map<std::string, TargetSpec>& targets();

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Validate, grid, evaluate (in parallel), format. Output is independent of
// the job count: workers fill an index-ordered vector and every double is
// rendered by the same locale-free shortest-17-digit formatter.
Table run_sweep(const SweepSpec& spec);

// Single-point evaluation through the same registry (the scalar subcommands).
Table run_point(const std::string& target, const std::map<std::string, double>& params,
                const UnitSystem& units, double tol);

std::string format_value(double v);
void write_table(const Table& table, std::ostream& os, char delimiter);

int resolve_jobs(int requested);

} // namespace kleinlab::cli
