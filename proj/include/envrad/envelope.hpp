#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envrad/decomposition.hpp"

namespace envrad {

struct EnvelopeOptions {
  /// The subset sum has 2^k - 2 terms; decompositions with more components
  /// than this are rejected.
  std::size_t max_components = 12;
  /// Verify the decomposition before using it.
  bool verify = true;
  VerifyOptions verify_options;
};

/// One term (∩_{i∈T} p_i)(∩_{i∉T} Q_i) of the envelope formula.
struct EnvelopeSummand {
  std::vector<std::size_t> subset;  // T, zero-based component indices
  std::string label;
  Ideal prime_part;
  Submodule module_part;
  Submodule product;
};

struct EnvelopeTrace {
  Submodule input;
  Decomposition decomposition;
  Ideal radical;           // ∩ p_i
  Submodule radical_term;  // (∩ p_i) M
  std::vector<EnvelopeSummand> summands;
  Submodule result;        // ⟨E_M(N)⟩
};

/// ⟨E_M(N)⟩ = N + (∩ p_i)M + Σ_{∅≠T⊊S} (∩_{i∈T} p_i)(∩_{i∈S∖T} Q_i) for a
/// primary decomposition of N.  Subsets are visited by size, then
/// lexicographically.  Throws PreconditionError for an invalid
/// decomposition (when verification is on) or too many components.
EnvelopeTrace envelope(const Decomposition& d, const EnvelopeOptions& options = {});

constexpr std::size_t kDefaultMaxIterations = 32;

struct IterationResult {
  /// N = ⟨E_0⟩, ⟨E_1⟩, ..., ending with two equal entries.
  std::vector<Submodule> chain;
  Submodule fixed_point;
  /// Number of envelope computations performed.
  std::size_t steps = 0;
};

/// UE_M(N): iterates the envelope, taking each decomposition from the
/// oracle, until two consecutive terms agree.  Throws OracleMiss or
/// IterationLimit.
IterationResult iterate_envelope(const Submodule& n, const DecompositionOracle& oracle,
                                 std::size_t max_iter = kDefaultMaxIterations);

/// wcl_p(N + pM), with its iteration chain.  Requires (N : M) ⊆ p and checks
/// that (N + pM : M) = p.
IterationResult weakly_closure_chain(const Submodule& n, const Ideal& p,
                                     const DecompositionOracle& oracle,
                                     std::size_t max_iter = kDefaultMaxIterations);
Submodule weakly_closure(const Submodule& n, const Ideal& p,
                         const DecompositionOracle& oracle,
                         std::size_t max_iter = kDefaultMaxIterations);

struct WeaklyRadicalResult {
  std::vector<Ideal> primes;
  std::vector<Submodule> closures;
  Submodule result;
};

/// wrad_M(N) = ∩_{p ∈ minAss(N:M)} wcl_p(N + pM).  When `min_primes` is
/// omitted, (N : M) must be monomial and its minimal primes are computed.
WeaklyRadicalResult weakly_radical(const Submodule& n,
                                   const std::optional<std::vector<Ideal>>& min_primes,
                                   const DecompositionOracle& oracle,
                                   std::size_t max_iter = kDefaultMaxIterations);

enum class WeakStatus { CertifiedWeaklyPrime, Counterexample, Unknown };

struct WeakWitness {
  Polynomial a;
  Polynomial b;
  ModuleVector m;
};

struct WeaklyPrimeVerdict {
  WeakStatus status = WeakStatus::Unknown;
  std::optional<WeakWitness> witness;
};

/// Certified when the primes form a chain and the envelope gives N back.
/// Never reports a negative verdict.
WeaklyPrimeVerdict certify_weakly_prime(const Decomposition& d,
                                        const EnvelopeOptions& options = {});

/// Bounded search for a, b, m with abm ∈ N, am ∉ N, bm ∉ N.  Candidates are
/// monomials of degree <= bound ascending by degree then degrevlex, and
/// module terms with positions ascending; the first witness is returned.
WeaklyPrimeVerdict find_weak_counterexample(const Submodule& n, unsigned degree_bound);

struct SemiprimeWitness {
  Polynomial r;
  ModuleVector m;
  unsigned k;
};

/// Bounded search for r^k m ∈ N with rm ∉ N (k <= bound).  Throws
/// PreconditionError for N = M.
std::optional<SemiprimeWitness> semiprime_spot_check(const Submodule& n,
                                                     unsigned degree_bound);

/// All monomials of total degree <= bound, ascending in degrevlex.
std::vector<Monomial> monomials_up_to(std::size_t num_vars, unsigned bound);

}  // namespace envrad
