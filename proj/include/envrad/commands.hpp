#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envrad/envelope.hpp"
#include "envrad/session.hpp"

namespace envrad {

struct CommandOptions {
  std::size_t max_iter = kDefaultMaxIterations;
  unsigned kmax = 20;
  std::optional<unsigned> bound;
  bool trace = false;
  /// Values of -p: prime names from the session, or polynomials.
  std::vector<std::string> primes;
  /// Extra oracle fixtures, e.g. from --oracle files.
  std::vector<Decomposition> fixtures;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kPrecondition = 2;
constexpr int kOracleMiss = 3;
constexpr int kIterationLimit = 4;
constexpr int kInternal = 5;
}  // namespace exit_code

/// Commands: verify, env, ue, wcl, wrad, cl, op, weakcheck, certify,
/// semiprime, minprimes, decompose, print.  Errors are mapped to exit codes
/// and a message in `err`; `out` holds the result only.
CommandResult run_command(const Session& session, const std::string& command,
                          const std::vector<std::string>& args, const CommandOptions& options);

/// Exit code for an exception escaping a command or the parser.
int exit_code_for(const std::exception& e);

/// Text written to stderr for an exception.
std::string describe_error(const std::exception& e);

/// Builds the decomposition oracle used by the commands.
DecompositionOracle make_oracle(const Session& session, const CommandOptions& options);

}  // namespace envrad
