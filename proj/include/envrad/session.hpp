#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "envrad/decomposition.hpp"

namespace envrad {

// Statements of a session file, kept in source order for printing.
struct ModuleDef {
  std::string name;
  std::vector<ModuleVector> generators;
};
struct PrimeDef {
  std::string name;
  std::vector<Polynomial> generators;
};
struct PrimaryDef {
  std::string name;
  std::vector<ModuleVector> generators;
  std::string prime;
};
struct DecompDef {
  std::string name;
  std::vector<std::string> components;
};
struct FixtureDef {
  std::string module;
  std::string decomp;
};

using Statement = std::variant<ModuleDef, PrimeDef, PrimaryDef, DecompDef, FixtureDef>;

/// A parsed session: one ring, one free module, named objects.  Modules,
/// primes and primaries share one namespace; decompositions have their own,
/// so `decomp N : ...` may reuse the name of the module it decomposes.
class Session {
 public:
  const RingPtr& ring() const { return ring_; }
  const ModulePtr& module() const { return module_; }
  const std::vector<Statement>& statements() const { return statements_; }

  const Submodule* find_module(std::string_view name) const;  // modules and primaries
  const Ideal* find_prime(std::string_view name) const;
  const Decomposition* find_decomposition(std::string_view name) const;

  const Submodule& module_named(std::string_view name) const;
  const Ideal& prime_named(std::string_view name) const;
  const Decomposition& decomposition_named(std::string_view name) const;

  /// Fixture decompositions in source order.
  std::vector<Decomposition> fixtures() const;

  /// Parses a polynomial or vector expression in this session's ring.
  Polynomial parse_polynomial(std::string_view text) const;
  ModuleVector parse_vector(std::string_view text) const;

 private:
  friend Session parse_session(std::string_view text);

  RingPtr ring_;
  ModulePtr module_;
  std::vector<Statement> statements_;
  std::map<std::string, Submodule, std::less<>> modules_;
  std::map<std::string, Ideal, std::less<>> primes_;
  std::map<std::string, PrimaryComponent, std::less<>> primaries_;
  std::map<std::string, Decomposition, std::less<>> decomps_;
  std::vector<std::string> fixture_order_;
};

/// Grammar:
///   session    := ring rank stmt*
///   ring       := "ring" "Q" "[" ident ("," ident)* "]" ";"
///   rank       := "free" INT ";"
///   moddef     := ident "=" "[" vector ("," vector)* "]" ";"
///   primedef   := "prime" ident "=" "ideal" "(" poly ("," poly)* ")" ";"
///   primarydef := "primary" ident "=" "[" vectors "]" "with" ident ";"
///   decompdef  := "decomp" ident ":" ident ("," ident)* ";"
///   fixture    := "fixture" ident "uses" ident ";"
/// Vectors are expressions in the variables and the basis names e1..en, or
/// coordinate tuples "[f1, ..., fn]".  Comments run from '#' or "//" to the
/// end of the line.  Throws ParseError.
Session parse_session(std::string_view text);

/// Canonical text of a session; parse_session(print_session(s)) prints the
/// same text again.
std::string print_session(const Session& s);

}  // namespace envrad
