#include "envrad/commands.hpp"

#include <functional>
#include <sstream>

#include "envrad/errors.hpp"
#include "envrad/module_algebra.hpp"

namespace envrad {

namespace {

std::string lines(const Submodule& n) { return to_string(n); }

std::string lines(const Ideal& ideal) {
  if (ideal.is_zero()) return "0\n";
  std::string out;
  for (const auto& g : ideal.reduced_gb()) out += to_string(g) + "\n";
  return out;
}

std::string ideal_text(const Ideal& ideal) { return "ideal(" + to_string(ideal) + ")"; }

void need_args(const std::string& command, const std::vector<std::string>& args,
               std::size_t count) {
  if (args.size() != count) {
    throw PreconditionError(command + ": expected " + std::to_string(count) + " argument" +
                            (count == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
  }
}

// A prime argument: a session prime name, or a polynomial generating it.
Ideal ideal_arg(const Session& s, const std::string& text) {
  if (const Ideal* p = s.find_prime(text)) return *p;
  return Ideal(s.ring(), {s.parse_polynomial(text)});
}

std::vector<Ideal> prime_args(const Session& s, const CommandOptions& options) {
  std::vector<Ideal> out;
  for (const auto& text : options.primes) out.push_back(ideal_arg(s, text));
  return out;
}

Ideal single_prime(const Session& s, const std::string& command, const CommandOptions& options) {
  if (options.primes.size() != 1) throw PreconditionError(command + ": exactly one -p prime is required");
  return ideal_arg(s, options.primes.front());
}

std::string join_prime_labels(const Decomposition& d) {
  if (d.size() == 1) return d[0].prime_label + "M";
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " ∩ " : "") + d[i].prime_label;
  return out + ")M";
}

std::string render_trace(const EnvelopeTrace& t) {
  std::string out = "-- N\n" + lines(t.input);
  out += "-- " + join_prime_labels(t.decomposition) + "\n" + lines(t.radical_term);
  for (const auto& s : t.summands) out += "-- " + s.label + "\n" + lines(s.product);
  out += "-- result\n";
  return out;
}

std::string render_chain(const IterationResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    out += "-- E" + std::to_string(i) + "\n" + lines(r.chain[i]);
  }
  out += "-- steps " + std::to_string(r.steps) + "\n-- result\n";
  return out;
}

unsigned bound_or(const CommandOptions& options, unsigned fallback) {
  return options.bound.value_or(fallback);
}

std::string run(const Session& s, const std::string& command, const std::vector<std::string>& args,
                const CommandOptions& options, int& code) {
  const VerifyOptions vopts{options.kmax};
  EnvelopeOptions eopts;
  eopts.verify_options = vopts;

  if (command == "print") {
    need_args(command, args, 0);
    return print_session(s);
  }
  if (command == "verify") {
    need_args(command, args, 1);
    const auto& d = s.decomposition_named(args[0]);
    const auto report = verify_decomposition(d, vopts);
    if (!report.valid()) code = exit_code::kPrecondition;
    return to_string(report, d);
  }
  if (command == "env") {
    need_args(command, args, 1);
    const auto trace = envelope(s.decomposition_named(args[0]), eopts);
    return (options.trace ? render_trace(trace) : "") + lines(trace.result);
  }
  if (command == "certify") {
    need_args(command, args, 1);
    const auto v = certify_weakly_prime(s.decomposition_named(args[0]), eopts);
    return v.status == WeakStatus::CertifiedWeaklyPrime ? "certified-weakly-prime\n" : "unknown\n";
  }
  if (command == "ue") {
    need_args(command, args, 1);
    const auto r = iterate_envelope(s.module_named(args[0]), make_oracle(s, options), options.max_iter);
    return (options.trace ? render_chain(r) : "") + lines(r.fixed_point);
  }
  if (command == "wcl") {
    need_args(command, args, 1);
    const auto r = weakly_closure_chain(s.module_named(args[0]), single_prime(s, command, options),
                                        make_oracle(s, options), options.max_iter);
    return (options.trace ? render_chain(r) : "") + lines(r.fixed_point);
  }
  if (command == "wrad") {
    need_args(command, args, 1);
    std::optional<std::vector<Ideal>> primes;
    if (!options.primes.empty()) primes = prime_args(s, options);
    const auto r = weakly_radical(s.module_named(args[0]), primes, make_oracle(s, options),
                                  options.max_iter);
    std::string out;
    if (options.trace) {
      for (std::size_t i = 0; i < r.primes.size(); ++i) {
        out += "-- wcl " + ideal_text(r.primes[i]) + "\n" + lines(r.closures[i]);
      }
      out += "-- result\n";
    }
    return out + lines(r.result);
  }
  if (command == "cl") {
    need_args(command, args, 1);
    return lines(closure(s.decomposition_named(args[0]), single_prime(s, command, options)));
  }
  if (command == "weakcheck") {
    need_args(command, args, 1);
    const unsigned bound = bound_or(options, 3);
    const auto v = find_weak_counterexample(s.module_named(args[0]), bound);
    if (!v.witness) return "no witness up to degree " + std::to_string(bound) + "\n";
    return "a=" + to_string(v.witness->a) + " b=" + to_string(v.witness->b) +
           " m=" + to_string(v.witness->m) + "\n";
  }
  if (command == "semiprime") {
    need_args(command, args, 1);
    const unsigned bound = bound_or(options, 2);
    const auto w = semiprime_spot_check(s.module_named(args[0]), bound);
    if (!w) return "no violation up to degree " + std::to_string(bound) + "\n";
    return "r=" + to_string(w->r) + " m=" + to_string(w->m) + " k=" + std::to_string(w->k) + "\n";
  }
  if (command == "minprimes") {
    need_args(command, args, 1);
    const Ideal colon_ideal = annihilator(s.module_named(args[0]));
    if (!colon_ideal.is_monomial()) throw PreconditionError("minprimes: (N : M) is not monomial");
    std::string out;
    for (const auto& p : minimal_primes_monomial(colon_ideal)) out += ideal_text(p) + "\n";
    return out;
  }
  if (command == "decompose") {
    need_args(command, args, 1);
    const auto d = monomial_primary_decomposition(s.module_named(args[0]));
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
      out += "prime " + d[i].prime_label + " = " + ideal_text(d[i].prime) + ";\n";
      std::string gens;
      for (const auto& g : d[i].primary.reduced_gb()) gens += (gens.empty() ? "" : ", ") + to_string(g);
      out += "primary " + d[i].label + " = [" + gens + "] with " + d[i].prime_label + ";\n";
    }
    out += "decomp " + args[0] + " :";
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : " ") + d[i].label;
    return out + ";\n";
  }
  if (command == "op") {
    if (args.empty()) throw PreconditionError("op: missing operation");
    const std::string& op = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (op == "sum" || op == "intersect") {
      need_args("op " + op, rest, 2);
      const auto& a = s.module_named(rest[0]);
      const auto& b = s.module_named(rest[1]);
      return lines(op == "sum" ? sum(a, b) : intersect(a, b));
    }
    if (op == "colon") {
      need_args("op colon", rest, 2);
      return lines(colon(s.module_named(rest[0]), ideal_arg(s, rest[1])));
    }
    if (op == "sat") {
      need_args("op sat", rest, 2);
      const auto r = stable_quotient(s.module_named(rest[0]), ideal_arg(s, rest[1]));
      return (options.trace ? "-- iterations " + std::to_string(r.iterations) + "\n" : "") +
             lines(r.module);
    }
    if (op == "ann") {
      need_args("op ann", rest, 1);
      return lines(annihilator(s.module_named(rest[0])));
    }
    if (op == "prod") {
      need_args("op prod", rest, 2);
      return lines(ideal_module_product(ideal_arg(s, rest[0]), s.module_named(rest[1])));
    }
    throw PreconditionError("op: unknown operation '" + op + "'");
  }
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace

DecompositionOracle make_oracle(const Session& session, const CommandOptions& options) {
  DecompositionOracle oracle(DecompositionOracle::Mode::AutomaticMonomial, VerifyOptions{options.kmax});
  for (auto& d : session.fixtures()) oracle.add_fixture(std::move(d));
  for (const auto& d : options.fixtures) oracle.add_fixture(d);
  return oracle;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return exit_code::kParse;
  if (dynamic_cast<const OracleMiss*>(&e)) return exit_code::kOracleMiss;
  if (dynamic_cast<const IterationLimit*>(&e)) return exit_code::kIterationLimit;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ContextMismatch*>(&e)) {
    return exit_code::kPrecondition;
  }
  return exit_code::kInternal;
}

std::string describe_error(const std::exception& e) {
  std::string out = "error: ";
  out += e.what();
  out += "\n";
  if (auto* miss = dynamic_cast<const OracleMiss*>(&e)) {
    out += "module without a decomposition (canonical basis):\n" + miss->canonical_basis();
  }
  return out;
}

CommandResult run_command(const Session& session, const std::string& command,
                          const std::vector<std::string>& args, const CommandOptions& options) {
  CommandResult result;
  try {
    result.out = run(session, command, args, options, result.exit_code);
  } catch (const std::exception& e) {
    result.exit_code = exit_code_for(e);
    result.err = describe_error(e);
  }
  return result;
}

}  // namespace envrad
