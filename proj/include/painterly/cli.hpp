#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "painterly/error.hpp"
#include "painterly/pipeline.hpp"

namespace painterly {

enum class Subcommand { Stylize, Analyze, Help };

struct CliInvocation {
    Subcommand command = Subcommand::Help;
    RunConfig run;
    AnalyzeConfig analyze;
    std::string help_text;  // filled for Subcommand::Help
};

/// Parses arguments (without the program name). Unknown flags and invalid
/// values throw Error(Usage).
CliInvocation parse_cli(const std::vector<std::string>& args);

/// Exit codes: 0 success, 1 usage, 2 I/O, 3 processing.
int exit_code_for(ErrorCode code) noexcept;

/// Full command-line entry point.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace painterly
