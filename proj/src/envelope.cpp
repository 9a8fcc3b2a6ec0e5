#include "envrad/envelope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "envrad/errors.hpp"

namespace envrad {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  if (labels.size() == 1) return labels.front();
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += " ∩ ";
    out += labels[i];
  }
  return out + ")";
}

// Nonempty proper subsets of {0..k-1}, by size then lexicographically.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size < k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      out.push_back(idx);
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

}  // namespace

EnvelopeTrace envelope(const Decomposition& d, const EnvelopeOptions& options) {
  const std::size_t k = d.size();
  if (k > options.max_components) {
    throw PreconditionError("envelope: " + std::to_string(k) + " components exceed the limit of " +
                            std::to_string(options.max_components));
  }
  if (options.verify) {
    const auto report = verify_decomposition(d, options.verify_options);
    if (!report.valid()) {
      throw PreconditionError("envelope: invalid decomposition\n" + to_string(report, d));
    }
  }
  const auto& ctx = d.target().context();
  const auto& ring = ctx->ring();

  std::vector<Ideal> primes;
  for (const auto& c : d.components()) primes.push_back(c.prime);
  Ideal radical = ideal_intersect_all(ring, primes);
  Submodule radical_term = ideal_module_product(radical, Submodule::whole(ctx));

  std::vector<EnvelopeSummand> summands;
  Submodule result = sum(d.target(), radical_term);
  for (auto& subset : proper_subsets(k)) {
    std::vector<Ideal> t_primes;
    std::vector<Submodule> rest;
    std::vector<std::string> t_labels, rest_labels;
    for (std::size_t i = 0; i < k; ++i) {
      if (std::binary_search(subset.begin(), subset.end(), i)) {
        t_primes.push_back(d[i].prime);
        t_labels.push_back(d[i].prime_label);
      } else {
        rest.push_back(d[i].primary);
        rest_labels.push_back(d[i].label);
      }
    }
    Ideal prime_part = ideal_intersect_all(ring, t_primes);
    Submodule module_part = intersect_all(ctx, rest);
    Submodule product = ideal_module_product(prime_part, module_part);
    result = sum(result, product);
    summands.push_back({std::move(subset), join_labels(t_labels) + join_labels(rest_labels),
                        std::move(prime_part), std::move(module_part), std::move(product)});
  }
  return {d.target(), d, std::move(radical), std::move(radical_term), std::move(summands),
          std::move(result)};
}

IterationResult iterate_envelope(const Submodule& n, const DecompositionOracle& oracle,
                                 std::size_t max_iter) {
  std::vector<Submodule> chain{n};
  if (n.is_whole()) {
    chain.push_back(n);
    return {std::move(chain), n, 1};
  }
  EnvelopeOptions options;
  options.verify = false;  // fixtures are verified on insertion
  for (std::size_t step = 1; step <= max_iter; ++step) {
    const Submodule& current = chain.back();
    Submodule next = envelope(oracle.decompose(current), options).result;
    if (!current.is_subset_of(next)) {
      throw std::logic_error("envelope iteration: chain is not ascending");
    }
    const bool fixed = next == current;
    chain.push_back(std::move(next));
    if (fixed) {
      Submodule fixed_point = chain.back();
      return {std::move(chain), std::move(fixed_point), step};
    }
    if (chain.back().is_whole()) {
      chain.push_back(chain.back());
      Submodule fixed_point = chain.back();
      return {std::move(chain), std::move(fixed_point), step + 1};
    }
  }
  throw IterationLimit("envelope iteration did not stabilize within " +
                       std::to_string(max_iter) + " steps");
}

IterationResult weakly_closure_chain(const Submodule& n, const Ideal& p,
                                     const DecompositionOracle& oracle, std::size_t max_iter) {
  detail::require_same_ring(p.ring(), n.context()->ring());
  if (!annihilator(n).is_subset_of(p)) {
    throw PreconditionError("weakly closure: (N : M) is not contained in the prime");
  }
  Submodule w = sum(n, ideal_module_product(p, Submodule::whole(n.context())));
  if (!(annihilator(w) == p)) {
    throw PreconditionError("weakly closure: (N + pM : M) differs from p; the certificate is not prime");
  }
  return iterate_envelope(w, oracle, max_iter);
}

Submodule weakly_closure(const Submodule& n, const Ideal& p, const DecompositionOracle& oracle,
                         std::size_t max_iter) {
  return weakly_closure_chain(n, p, oracle, max_iter).fixed_point;
}

WeaklyRadicalResult weakly_radical(const Submodule& n,
                                   const std::optional<std::vector<Ideal>>& min_primes,
                                   const DecompositionOracle& oracle, std::size_t max_iter) {
  const Ideal colon_ideal = annihilator(n);
  std::vector<Ideal> primes;
  if (min_primes) {
    primes = *min_primes;
    for (const auto& p : primes) {
      if (!colon_ideal.is_subset_of(p)) {
        throw PreconditionError("weakly radical: a supplied prime does not contain (N : M)");
      }
    }
  } else {
    if (!colon_ideal.is_monomial()) {
      throw PreconditionError(
          "weakly radical: (N : M) is not monomial; supply its minimal primes");
    }
    primes = minimal_primes_monomial(colon_ideal);
  }
  std::vector<Submodule> closures;
  for (const auto& p : primes) closures.push_back(weakly_closure(n, p, oracle, max_iter));
  Submodule result = intersect_all(n.context(), closures);
  return {std::move(primes), std::move(closures), std::move(result)};
}

WeaklyPrimeVerdict certify_weakly_prime(const Decomposition& d, const EnvelopeOptions& options) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (!d[i].prime.is_subset_of(d[j].prime) && !d[j].prime.is_subset_of(d[i].prime)) {
        return {WeakStatus::Unknown, std::nullopt};
      }
    }
  }
  if (envelope(d, options).result == d.target()) {
    return {WeakStatus::CertifiedWeaklyPrime, std::nullopt};
  }
  return {WeakStatus::Unknown, std::nullopt};
}

std::vector<Monomial> monomials_up_to(std::size_t num_vars, unsigned bound) {
  std::vector<Monomial> out;
  Monomial m(num_vars);
  // Odometer over exponent vectors with total degree <= bound.
  std::vector<Monomial::Exponent> e(num_vars, 0);
  for (;;) {
    out.emplace_back(std::span<const Monomial::Exponent>(e));
    std::size_t i = 0;
    for (; i < num_vars; ++i) {
      unsigned total = 0;
      for (auto v : e) total += v;
      if (total < bound) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == num_vars) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return monomial_compare(a, b) < 0; });
  return out;
}

namespace {

// Membership of single-term vectors x^a * e_i, memoized.
class TermMembership {
 public:
  explicit TermMembership(const Submodule& n) : n_(n) {}

  bool contains(const Monomial& m, std::size_t position) {
    auto key = std::make_pair(position, std::vector<Monomial::Exponent>(
                                            m.exponents().begin(), m.exponents().end()));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TermVector v{ModuleTerm{m, 1, position}};
    const bool in = gb::normal_form(std::move(v), n_.basis_terms(), ModuleOrder{}).empty();
    cache_.emplace(std::move(key), in);
    return in;
  }

 private:
  const Submodule& n_;
  std::map<std::pair<std::size_t, std::vector<Monomial::Exponent>>, bool> cache_;
};

}  // namespace

WeaklyPrimeVerdict find_weak_counterexample(const Submodule& n, unsigned degree_bound) {
  if (degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
  const auto& ctx = n.context();
  const auto& ring = ctx->ring();
  const auto monos = monomials_up_to(ring->num_vars(), degree_bound);
  TermMembership member(n);
  // A first witness (a, b, m) always has a no later than b in the
  // enumeration, since (b, a, m) is a witness too.
  for (std::size_t ai = 1; ai < monos.size(); ++ai) {
    for (std::size_t bi = ai; bi < monos.size(); ++bi) {
      const Monomial ab = monos[ai] * monos[bi];
      for (const auto& m : monos) {
        for (std::size_t pos = 0; pos < ctx->rank(); ++pos) {
          if (!member.contains(ab * m, pos)) continue;
          if (member.contains(monos[ai] * m, pos)) continue;
          if (member.contains(monos[bi] * m, pos)) continue;
          WeakWitness w{Polynomial::term(ring, monos[ai], 1), Polynomial::term(ring, monos[bi], 1),
                        ModuleVector::from_terms(ctx, std::vector<ModuleTerm>{{m, 1, pos}})};
          return {WeakStatus::Counterexample, std::move(w)};
        }
      }
    }
  }
  return {WeakStatus::Unknown, std::nullopt};
}

std::optional<SemiprimeWitness> semiprime_spot_check(const Submodule& n, unsigned degree_bound) {
  if (degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
  if (n.is_whole()) throw PreconditionError("semiprime check needs a proper submodule");
  const auto& ctx = n.context();
  const auto& ring = ctx->ring();
  const auto monos = monomials_up_to(ring->num_vars(), degree_bound);
  TermMembership member(n);
  for (std::size_t ri = 1; ri < monos.size(); ++ri) {
    const Monomial& r = monos[ri];
    for (const auto& m : monos) {
      for (std::size_t pos = 0; pos < ctx->rank(); ++pos) {
        if (member.contains(r * m, pos)) continue;
        for (unsigned k = 2; k <= degree_bound; ++k) {
          if (member.contains(r.pow(k) * m, pos)) {
            return SemiprimeWitness{Polynomial::term(ring, r, 1),
                                    ModuleVector::from_terms(ctx, std::vector<ModuleTerm>{{m, 1, pos}}),
                                    k};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace envrad
