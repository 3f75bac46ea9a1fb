#ifndef KRCHAR_CLI_HPP
#define KRCHAR_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "krchar/limits.hpp"

namespace krchar {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3 };

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;
  std::string lie_type;
  std::optional<int> node;
  std::string check = "all";
  std::string kind = "my";
  int order = 4;
  std::optional<int> m;
  std::optional<int> m_max;
  int jobs = 1;
  OutputFormat format = OutputFormat::Text;
  std::string out_path;
  Limits limits;
};

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_registry(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krchar

#endif
