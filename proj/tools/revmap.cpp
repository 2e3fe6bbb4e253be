// revmap: command-line front end for linear reversible maps given as pairs of involutions.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revmap/cli/commands.hpp"

namespace {

struct Descriptor {
    const char* name;
    const char* help;
};

constexpr Descriptor kCommands[] = {
    {"check", "verify involutions, transversality and reversibility of F"},
    {"classify", "normal form, case tag, trace invariant and conjugacy witness"},
    {"chains", "verify the chain links between fixed subspaces up to --kmax"},
    {"periodic", "periodic-orbit certificates from fixed-subspace intersections"},
    {"symmetries", "linear symmetry and reversing spaces of F"},
    {"conjugate", "find h with h psi_i h^-1 = phi_i for two pair files"},
    {"orbit", "exact orbit of --point for --steps iterations"},
    {"plot", "SVG of the fixed lines up to --kmax, written to --out"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of linear maps F = phi1 * phi2 composed of two involutions"};
    app.require_subcommand(1);

    revmap::cli::CommandOptions opts;
    std::vector<std::string> files;
    bool pretty = false;
    std::string point;

    for (const Descriptor& d : kCommands) {
        CLI::App* sub = app.add_subcommand(d.name, d.help);
        sub->add_option("files", files, "pair document(s)")->required();
        sub->add_option("--kmax", opts.k_max, "largest reversor index")->capture_default_str();
        sub->add_option("--point", point, "comma-separated exact coordinates, e.g. 1,-1/2");
        sub->add_option("--steps", opts.steps, "orbit length (negative walks backwards)")->capture_default_str();
        sub->add_option("--out", opts.out, "output path for plot");
        sub->add_flag("--pretty", pretty, "human-readable summary instead of JSON");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return revmap::cli::exit_input_error;
    }
    if (!point.empty()) opts.point = point;

    const std::string command = app.get_subcommands().front()->get_name();
    return revmap::cli::run_command(command, files, opts, pretty, std::cout, std::cerr);
}
