#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envrad/module_algebra.hpp"

namespace envrad {

/// A claimed p-primary component Q.  The prime is a certificate: it is
/// checked against Q but never proved prime.
struct PrimaryComponent {
  Submodule primary;
  Ideal prime;
  std::string label;
  std::string prime_label;
};

/// target = Q_1 ∩ ... ∩ Q_k, as claimed by a certificate.
class Decomposition {
 public:
  Decomposition(Submodule target, std::vector<PrimaryComponent> components);

  const Submodule& target() const { return target_; }
  const std::vector<PrimaryComponent>& components() const { return components_; }
  const PrimaryComponent& operator[](std::size_t i) const { return components_[i]; }
  std::size_t size() const { return components_.size(); }

 private:
  Submodule target_;
  std::vector<PrimaryComponent> components_;
};

enum class DecompositionCheck {
  Intersection,    // (a) ∩ Q_i = target
  ColonInPrime,    // (b) (Q_i : M) ⊆ p_i, Q_i proper, p_i proper
  PrimePower,      // (c) p_i^k M ⊆ Q_i for some k <= k_max
  DistinctPrimes,  // (d)
  Irredundant,     // (e)
};

std::string_view check_name(DecompositionCheck check);

struct CheckFailure {
  DecompositionCheck check;
  std::optional<std::size_t> component;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckFailure> failures;
  /// Primality of the certificate primes is never decided.
  bool primality_assumed = true;

  bool valid() const { return failures.empty(); }
  bool failed(DecompositionCheck check) const;
};

struct VerifyOptions {
  unsigned k_max = 20;
};

VerificationReport verify_decomposition(const Decomposition& d,
                                        const VerifyOptions& options = {});
std::string to_string(const VerificationReport& report, const Decomposition& d);

using PowerVector = std::vector<Monomial::Exponent>;

/// Irredundant irreducible decomposition of the monomial ideal generated by
/// `generators`.  Each entry lists the pure-power exponents of one
/// irreducible component ⟨x_j^{a_j} : a_j > 0⟩; an all-zero entry is the zero
/// ideal.  The unit ideal yields no components.  Output is sorted.
std::vector<PowerVector> irreducible_decomposition(std::span<const Monomial> generators,
                                                   std::size_t num_vars);

/// Primary decomposition of a monomial submodule: each position ideal is
/// split into irreducible components, each lifted to M with the other
/// positions left free, and components with equal radical are merged.
/// Throws PreconditionError for non-monomial input or for N = M.
Decomposition monomial_primary_decomposition(const Submodule& n);

/// Minimal primes of a monomial ideal, i.e. the minimal vertex covers of the
/// generator supports, sorted by size and then by variable indices.
std::vector<Ideal> minimal_primes_monomial(const Ideal& ideal);

/// Indices of the components whose prime is minimal among all the primes.
std::vector<std::size_t> isolated_components(const Decomposition& d);

struct QuasiPrimaryGroup {
  std::size_t isolated_index;
  Polynomial separator;
  /// e with separator^e * part ⊆ N (the saturation exponent, at least 1).
  std::size_t exponent;
  Decomposition part;
};

struct QuasiPrimarySplit {
  std::vector<QuasiPrimaryGroup> groups;
  /// N' = N + J*M with J generated by the powers separator^exponent.
  Submodule remainder;
};

QuasiPrimarySplit quasi_primary_split(const Decomposition& d);

/// Components kept by the p-closure (those with p_i ⊆ p).
std::vector<std::size_t> closure_components(const Decomposition& d, const Ideal& p);

/// cl_p(N) = ∩_{p_i ⊆ p} Q_i, or M when no component qualifies.  Throws
/// PreconditionError unless (N : M) ⊆ p.
Submodule closure(const Decomposition& d, const Ideal& p);

/// Source of primary decompositions for modules met during envelope
/// iteration.  Fixtures are looked up by canonical reduced basis; in
/// automatic mode monomial modules not in the table are decomposed directly.
class DecompositionOracle {
 public:
  enum class Mode { AutomaticMonomial, FixtureTable, Fail };

  explicit DecompositionOracle(Mode mode = Mode::AutomaticMonomial,
                               VerifyOptions options = {});

  /// Verifies the decomposition first; throws PreconditionError if invalid.
  void add_fixture(Decomposition d);

  Mode mode() const { return mode_; }
  std::size_t fixture_count() const { return fixtures_.size(); }
  std::optional<Decomposition> lookup(const Submodule& n) const;
  /// Throws OracleMiss when no decomposition is available.
  Decomposition decompose(const Submodule& n) const;

 private:
  Mode mode_;
  VerifyOptions options_;
  std::map<std::string, Decomposition> fixtures_;
};

}  // namespace envrad
