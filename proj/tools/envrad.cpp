#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "envrad/commands.hpp"
#include "envrad/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw envrad::PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

envrad::Session load(const std::string& path) {
  try {
    return envrad::parse_session(read_file(path));
  } catch (const envrad::ParseError& e) {
    throw envrad::ParseError(path + ": " + e.what(), e.line(), e.column(), "");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envelopes, weakly closures and weakly radicals of submodules of free modules"};
  std::string session_path, command;
  std::vector<std::string> args;
  std::vector<std::string> oracle_paths;
  envrad::CommandOptions options;

  app.add_option("session", session_path, "session file")->required();
  app.add_option("command", command,
                 "verify | env | ue | wcl | wrad | cl | op | weakcheck | certify | semiprime | "
                 "minprimes | decompose | print")
      ->required();
  app.add_option("args", args, "command arguments");
  app.add_option("--max-iter", options.max_iter, "envelope iteration limit")
      ->envname("ENVRAD_MAX_ITER")
      ->check(CLI::PositiveNumber);
  app.add_option("--kmax", options.kmax, "largest k tried for p^k M ⊆ Q")->check(CLI::PositiveNumber);
  app.add_option("--bound", options.bound, "degree bound for witness searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", options.trace, "print intermediate modules");
  app.add_option("-p,--prime", options.primes, "prime names or polynomials")->delimiter(',');
  app.add_option("--oracle", oracle_paths, "session file with extra fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : envrad::exit_code::kParse;
  }

  try {
    const envrad::Session session = load(session_path);
    for (const auto& path : oracle_paths) {
      const envrad::Session extra = load(path);
      if (extra.ring()->variable_names() != session.ring()->variable_names() ||
          extra.module()->rank() != session.module()->rank()) {
        throw envrad::ContextMismatch(path + ": ring or rank differs from the session");
      }
      for (auto& d : extra.fixtures()) options.fixtures.push_back(std::move(d));
    }
    const auto result = envrad::run_command(session, command, args, options);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << envrad::describe_error(e);
    return envrad::exit_code_for(e);
  }
}
