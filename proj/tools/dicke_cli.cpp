// Command-line front end: sweep | tc | compare | converge.
//
// Each subcommand reads an optional JSON config (--config) and applies flag
// overrides on top, then writes CSV/JSON data files into the output
// directory. DICKE_WORKERS limits the number of evaluation threads.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dicke/run.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    dicke::ConfigOverrides overrides;
    std::string atoms_csv;
};

void add_common_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--epsilon", args.overrides.epsilon, "qubit level splitting");
    cmd->add_option("--lambda", args.overrides.lambda, "coupling strength");
    cmd->add_option("--omega", args.overrides.omega, "photon energy");
    cmd->add_option("--atoms", args.atoms_csv, "comma-separated atom counts");
    cmd->add_option("--beta-min", args.overrides.beta_min, "beta grid minimum");
    cmd->add_option("--beta-max", args.overrides.beta_max, "beta grid maximum");
    cmd->add_option("--beta-steps", args.overrides.beta_steps, "beta grid point count");
    cmd->add_option("--beta-scale", args.overrides.beta_scale, "beta grid scale: linear | log");
    cmd->add_option("--tol", args.overrides.tol, "boson cutoff tolerance");
    cmd->add_option("--out", args.overrides.out_dir, "output directory");
    cmd->add_option("--format", args.overrides.format, "sweep output format: csv | json");
}

std::vector<int> parse_atoms_csv(const std::string& text) {
    std::vector<int> atoms;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        atoms.push_back(std::stoi(item));
    }
    if (atoms.empty()) throw dicke::ConfigError("--atoms: empty list");
    return atoms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dicke model thermodynamics: finite-N sweeps, critical temperatures, "
                 "effective-model comparisons, cutoff convergence"};
    app.require_subcommand(0, 1);

    CliArgs args;
    CLI::App* sweep = app.add_subcommand("sweep", "thermodynamic sweep over (kind, N, beta)");
    CLI::App* tc = app.add_subcommand("tc", "gap-equation critical temperatures");
    CLI::App* compare = app.add_subcommand("compare", "Dicke vs effective-model free energies");
    CLI::App* converge = app.add_subcommand("converge", "boson cutoff convergence ladder");
    for (CLI::App* cmd : {sweep, tc, compare, converge}) add_common_options(cmd, args);

    // CLI11 rejects unknown subcommands as a parse error; map that (and any
    // missing subcommand) onto the documented status
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code == 0) return 0;  // --help
        return dicke::kExitUnknownCommand;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << "expected a subcommand: sweep | tc | compare | converge\n";
        return dicke::kExitUnknownCommand;
    }

    dicke::RunConfig config;
    try {
        config = dicke::load_config(args.config_path);
        if (!args.atoms_csv.empty()) args.overrides.atoms = parse_atoms_csv(args.atoms_csv);
        dicke::apply_overrides(config, args.overrides);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return dicke::kExitConfigError;
    }

    if (sweep->parsed()) return dicke::cmd_sweep(config);
    if (tc->parsed()) return dicke::cmd_tc(config);
    if (compare->parsed()) return dicke::cmd_compare(config);
    if (converge->parsed()) return dicke::cmd_converge(config);
    return dicke::kExitUnknownCommand;
}
