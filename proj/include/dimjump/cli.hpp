#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dimjump/task.hpp"
#include "dimjump/verify.hpp"

namespace dimjump {

enum ExitStatus { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

struct SessionConfig {
  std::string command;
  std::string input_path;
  std::vector<std::string> names;
  std::optional<Field> field;
  std::optional<OrderKind> order;
  std::optional<Window> window;  // overrides the task file; default -20:20
  std::optional<int> qmax;       // default 4
  std::optional<int> q;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t runs = 1000;  // fuzz only
  std::optional<std::uint64_t> budget;  // work steps, unlimited when absent
};

struct DispatchResult {
  int status = kExitPass;
  std::vector<CheckReport> reports;
  std::string diagnostics;
};

// Commands that act on a task; "fuzz" is accepted as well and mutates the task text.
const std::vector<std::string>& command_names();

// Runs one command against the task text (which may be empty for commands
// that need no task). Never throws.
DispatchResult dispatch(const SessionConfig& config, const std::string& task_text);

std::vector<CheckReport> run_checks(const TaskFile& task, const SessionConfig& config,
                                    const std::vector<CheckDef>& checks);

std::string emit_report(const std::vector<CheckReport>& reports, const std::string& format);

// Full command line entry point; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimjump
