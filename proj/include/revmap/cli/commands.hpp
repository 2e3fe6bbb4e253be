#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revmap/cli/report.hpp"

namespace revmap::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_input_error = 2,
};

struct CommandOutcome {
    json report;
    int exit_code = exit_ok;
    /// Short human-readable lines for --pretty.
    std::vector<std::string> summary;
};

struct CommandOptions {
    int k_max = 10;
    std::optional<std::string> point;
    long steps = 10;
    std::optional<std::string> out;
};

CommandOutcome cmd_check(const std::string& path);
CommandOutcome cmd_classify(const std::string& path);
CommandOutcome cmd_chains(const std::string& path, const CommandOptions& opts);
CommandOutcome cmd_periodic(const std::string& path, const CommandOptions& opts);
CommandOutcome cmd_symmetries(const std::string& path);
CommandOutcome cmd_conjugate(const std::string& path_a, const std::string& path_b);
CommandOutcome cmd_orbit(const std::string& path, const CommandOptions& opts);
CommandOutcome cmd_plot(const std::string& path, const CommandOptions& opts);

/// "x,y,..." -> exact vector. Throws parse_error.
Vector parse_point(const std::string& text);

/// Runs one subcommand and maps exceptions onto exit codes: malformed input
/// gives 2, failed mathematical preconditions give 1. Writes the report (or
/// the summary when pretty) to out and diagnostics to err.
int run_command(const std::string& command, const std::vector<std::string>& files, const CommandOptions& opts,
                bool pretty, std::ostream& out, std::ostream& err);

}  // namespace revmap::cli
