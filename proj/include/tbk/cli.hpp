#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tbk::cli {

/// Exit statuses of the tbk tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kOperationalError = 2,
    kVerificationFailed = 3,
};

struct CommandRequest {
    std::string subcommand;  ///< word, prep, roots, factors, longitude, ford, shimizu, verify-8-11, report
    long alpha = 0;
    long beta = 0;
    int root = 1;  ///< 1-based index into the sorted roots of Lambda
    int depth = 8;
    int max_len = 8;
    int samples = 2048;
    bool json = false;
    bool timings = false;
    std::optional<std::string> svg_path;
    std::optional<std::string> factor;       ///< polynomial text for verify-8-11
    std::optional<std::string> factor_file;  ///< file holding polynomial text
    std::optional<std::string> help;         ///< set when help was requested
};

/// argv excludes the program name. Throws UsageError for unknown
/// subcommands or flags, missing or non-integer alpha/beta, invalid forms and
/// out-of-range option values.
CommandRequest parse_command(const std::vector<std::string>& args);

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Runs a validated request. Library errors become a JSON object on err with
/// exit status 2; failed verifications exit with 3.
CommandResult run_command(const CommandRequest& request);

/// parse_command + run_command with usage errors mapped to exit status 1.
CommandResult run(const std::vector<std::string>& args);

}  // namespace tbk::cli
