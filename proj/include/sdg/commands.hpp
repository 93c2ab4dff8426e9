// Query commands behind the command-line tool.
#ifndef SDG_COMMANDS_HPP
#define SDG_COMMANDS_HPP

#include "sdg/model.hpp"
#include "sdg/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdg {

enum ExitCode : int { kPass = 0, kFail = 1, kUnknown = 2, kError = 3 };

struct CommandOptions {
  std::optional<std::string> model_path;
  std::uint64_t seed = SampleConfig{}.seed;
  std::optional<std::size_t> budget;
  bool json = false;
};

struct CommandResult {
  int exit_code = kError;
  std::string output;
};

/// Parses "[a,b,...]" or "a,b,..." into a gamble on `scope`.
Gamble parse_gamble(const std::string& text, const Scope& scope);

/// Parses "X1=a,X2=b" into an outcome of the named variables.
Outcome parse_assignment(const std::string& text, const Scope& universe);

/// Parses "X1,X2" into a scope; an empty string gives the empty scope.
Scope parse_scope(const std::string& text, const Scope& universe);

/// Runs args[0] with the remaining arguments. Errors are reported in the
/// output with exit code kError.
CommandResult run_command(const std::vector<std::string>& args, const CommandOptions& opts);
/// Same, against an already loaded model.
CommandResult run_command(const std::vector<std::string>& args, const Model& model, const CommandOptions& opts);

}  // namespace sdg

#endif  // SDG_COMMANDS_HPP
