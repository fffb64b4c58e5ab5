#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/models.hpp"
#include "dicke/thermo.hpp"

namespace dicke {

// Exit statuses shared by the CLI and the in-process command entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericError = 3;
inline constexpr int kExitUnknownCommand = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<ModelKind> kinds;
    double epsilon = 1.0;
    double lambda = 1.0;
    double omega = 1.0;
    std::vector<double> epsilons;  // tc grid; defaults to {epsilon}
    std::vector<double> lambdas;   // tc grid; defaults to {lambda}
    std::vector<int> atoms;
    std::vector<double> betas;  // strictly positive, strictly increasing
    double tol = 1e-8;
    std::string out_dir = ".";
    std::string format = "csv";  // csv | json (sweep output only)

    void validate() const;  // throws ConfigError
};

// Field-by-field CLI overrides applied on top of the config file.
struct ConfigOverrides {
    std::optional<double> epsilon, lambda, omega, tol;
    std::optional<std::vector<int>> atoms;
    std::optional<double> beta_min, beta_max;
    std::optional<int> beta_steps;
    std::optional<std::string> beta_scale;  // linear | log
    std::optional<std::string> out_dir, format;
};

// Parses the JSON config document; empty path yields the defaults.
RunConfig load_config(const std::string& path);
void apply_overrides(RunConfig& config, const ConfigOverrides& ov);

// β grid from min/max/steps; scale is "linear" or "log".
std::vector<double> make_beta_grid(double min, double max, int steps, const std::string& scale);

// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

struct SweepRow {
    ModelKind kind;
    int n_atoms;
    ThermoPoint point;
};

// Grid evaluation used by cmd_sweep, exposed for round-trip tests.
std::vector<SweepRow> evaluate_sweep(const RunConfig& config);
std::string sweep_rows_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_rows_from_json(const std::string& text);

// Subcommands. Each validates the config, writes its data files under
// config.out_dir, and returns an exit status (errors are reported on stderr,
// never thrown out).
int cmd_sweep(const RunConfig& config);
int cmd_tc(const RunConfig& config);
int cmd_compare(const RunConfig& config);
int cmd_converge(const RunConfig& config);

}  // namespace dicke
