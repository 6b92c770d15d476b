#pragma once

#include <stdexcept>
#include <string>

#include "lwaudit/report/run_config.hpp"
#include "lwaudit/report/serialization.hpp"

namespace lwaudit::report {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInconsistency = 2,
  kPrecondition = 3,
  kAccuracy = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;   // file body (CSV or JSON)
  std::string summary;  // one line for the terminal, may be empty
};

std::string tool_version();

// Explicit config value, else SOURCE_DATE_EPOCH, else now; ISO 8601 UTC.
std::string resolve_timestamp(const RunConfig& cfg);

// Maps a thrown error onto the exit-code table.
int exit_code_for(const std::exception& e);

CommandResult cmd_zeros(const RunConfig& cfg);
CommandResult cmd_census(const RunConfig& cfg);
CommandResult cmd_audit(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_figure_data(const RunConfig& cfg);

SweepTable run_sweep(const RunConfig& cfg);

// Dispatches by name and converts errors into exit codes; never throws.
CommandResult run_command(const std::string& name, const RunConfig& cfg);

}  // namespace lwaudit::report
