#include "envrad/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "envrad/errors.hpp"

namespace envrad {

Decomposition::Decomposition(Submodule target, std::vector<PrimaryComponent> components)
    : target_(std::move(target)), components_(std::move(components)) {
  if (components_.empty()) {
    throw PreconditionError("a decomposition needs at least one component");
  }
  for (auto& c : components_) {
    if (!same_module(c.primary.context(), target_.context())) {
      throw ContextMismatch("component " + c.label + " lives in a different free module");
    }
    detail::require_same_ring(c.prime.ring(), target_.context()->ring());
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].label.empty()) components_[i].label = "Q" + std::to_string(i + 1);
    if (components_[i].prime_label.empty()) {
      components_[i].prime_label = "p" + std::to_string(i + 1);
    }
  }
}

std::string_view check_name(DecompositionCheck check) {
  switch (check) {
    case DecompositionCheck::Intersection: return "intersection";
    case DecompositionCheck::ColonInPrime: return "colon-in-prime";
    case DecompositionCheck::PrimePower: return "prime-power";
    case DecompositionCheck::DistinctPrimes: return "distinct-primes";
    case DecompositionCheck::Irredundant: return "irredundant";
  }
  return "unknown";
}

bool VerificationReport::failed(DecompositionCheck check) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const CheckFailure& f) { return f.check == check; });
}

namespace {

bool prime_power_inside(const Ideal& prime, const Ideal& colon_ideal, unsigned k_max) {
  if (prime.is_zero()) return true;
  for (const auto& g : prime.reduced_gb()) {
    if (!colon_ideal.contains(g.pow(k_max))) return false;
  }
  Ideal power = prime;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (power.is_subset_of(colon_ideal)) return true;
    power = ideal_product(power, prime);
  }
  return false;
}

}  // namespace

VerificationReport verify_decomposition(const Decomposition& d, const VerifyOptions& options) {
  VerificationReport report;
  const auto& comps = d.components();
  const auto& ctx = d.target().context();

  std::vector<Submodule> primaries;
  for (const auto& c : comps) primaries.push_back(c.primary);

  if (!(intersect_all(ctx, primaries) == d.target())) {
    report.failures.push_back({DecompositionCheck::Intersection, std::nullopt,
                               "the components do not intersect to the target"});
  }

  std::vector<Ideal> colons;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    colons.push_back(annihilator(c.primary));
    if (c.primary.is_whole()) {
      report.failures.push_back({DecompositionCheck::ColonInPrime, i,
                                 c.label + " is the whole module"});
    } else if (c.prime.is_unit()) {
      report.failures.push_back({DecompositionCheck::ColonInPrime, i,
                                 c.prime_label + " is the unit ideal"});
    } else if (!colons.back().is_subset_of(c.prime)) {
      report.failures.push_back({DecompositionCheck::ColonInPrime, i,
                                 "(" + c.label + " : M) is not contained in " + c.prime_label});
    }
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!prime_power_inside(comps[i].prime, colons[i], options.k_max)) {
      report.failures.push_back(
          {DecompositionCheck::PrimePower, i,
           "no power " + comps[i].prime_label + "^k with k <= " +
               std::to_string(options.k_max) + " maps M into " + comps[i].label});
    }
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].prime == comps[j].prime) {
        report.failures.push_back({DecompositionCheck::DistinctPrimes, j,
                                   comps[i].prime_label + " = " + comps[j].prime_label});
      }
    }
  }

  if (comps.size() > 1) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::vector<Submodule> others;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i != j) others.push_back(comps[i].primary);
      }
      if (intersect_all(ctx, others).is_subset_of(comps[j].primary)) {
        report.failures.push_back({DecompositionCheck::Irredundant, j,
                                   comps[j].label + " is redundant"});
      }
    }
  }
  return report;
}

std::string to_string(const VerificationReport& report, const Decomposition& d) {
  (void)d;
  std::string out;
  for (auto check : {DecompositionCheck::Intersection, DecompositionCheck::ColonInPrime,
                     DecompositionCheck::PrimePower, DecompositionCheck::DistinctPrimes,
                     DecompositionCheck::Irredundant}) {
    out += check_name(check);
    bool any = false;
    for (const auto& f : report.failures) {
      if (f.check != check) continue;
      out += any ? "; " : ": FAIL (";
      out += f.detail;
      any = true;
    }
    out += any ? ")\n" : ": ok\n";
  }
  out += "primality: assumed\n";
  out += report.valid() ? "valid\n" : "invalid\n";
  return out;
}

// ---------------------------------------------------------------------------
// Monomial submodules

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool covered = std::any_of(out.begin(), out.end(),
                               [&](const Monomial& m) { return m.divides(g); });
    if (!covered) out.push_back(std::move(g));
  }
  return out;
}

void split_irreducible(std::vector<Monomial> gens, std::size_t num_vars,
                       std::vector<PowerVector>& out) {
  gens = minimalize(std::move(gens));
  for (const auto& g : gens) {
    if (g.is_one()) return;  // unit ideal
  }
  for (const auto& g : gens) {
    std::size_t support = 0, first = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (g[j] > 0) {
        if (support == 0) first = j;
        ++support;
      }
    }
    if (support < 2) continue;
    Monomial pure = Monomial::variable(num_vars, first, g[first]);
    Monomial rest = g / pure;
    auto left = gens;
    left.push_back(pure);
    auto right = std::move(gens);
    right.push_back(rest);
    split_irreducible(std::move(left), num_vars, out);
    split_irreducible(std::move(right), num_vars, out);
    return;
  }
  PowerVector powers(num_vars, 0);
  for (const auto& g : gens) {
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (g[j] > 0) powers[j] = g[j];
    }
  }
  out.push_back(std::move(powers));
}

// ⟨x_j^{a_j}⟩ ⊆ ⟨x_j^{b_j}⟩
bool irreducible_leq(const PowerVector& a, const PowerVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (b[j] == 0 || b[j] > a[j]) return false;
  }
  return true;
}

std::vector<bool> support_of(const PowerVector& p) {
  std::vector<bool> s(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) s[j] = p[j] > 0;
  return s;
}

// Size first, then the sorted variable index lists lexicographically.
bool support_less(const std::vector<bool>& a, const std::vector<bool>& b) {
  auto count = [](const std::vector<bool>& s) { return std::count(s.begin(), s.end(), true); };
  const auto ca = count(a), cb = count(b);
  if (ca != cb) return ca < cb;
  std::vector<std::size_t> ia, ib;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j]) ia.push_back(j);
    if (b[j]) ib.push_back(j);
  }
  return ia < ib;
}

Ideal prime_of_support(const RingPtr& ring, const std::vector<bool>& support) {
  std::vector<Polynomial> vars;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j]) vars.push_back(Polynomial::variable(ring, j));
  }
  return Ideal(ring, std::move(vars));
}

Ideal ideal_of_powers(const RingPtr& ring, const PowerVector& p) {
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] > 0) {
      gens.push_back(Polynomial::term(ring, Monomial::variable(p.size(), j, p[j]), 1));
    }
  }
  return Ideal(ring, std::move(gens));
}

void require_monomial(const Submodule& n) {
  if (!n.is_monomial()) {
    throw PreconditionError("input is not a monomial submodule (non-monomial generator)");
  }
}

}  // namespace

std::vector<PowerVector> irreducible_decomposition(std::span<const Monomial> generators,
                                                   std::size_t num_vars) {
  std::vector<PowerVector> raw;
  split_irreducible(std::vector<Monomial>(generators.begin(), generators.end()), num_vars,
                    raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<PowerVector> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      redundant = j != i && irreducible_leq(raw[j], raw[i]);
    }
    if (!redundant) out.push_back(raw[i]);
  }
  return out;
}

Decomposition monomial_primary_decomposition(const Submodule& n) {
  require_monomial(n);
  if (n.is_whole()) {
    throw PreconditionError("the whole module has no primary decomposition");
  }
  const auto& ctx = n.context();
  const auto& ring = ctx->ring();
  const std::size_t nv = ring->num_vars();
  const std::size_t rank = ctx->rank();

  std::vector<std::vector<Monomial>> position_gens(rank);
  for (const auto& g : n.basis_terms()) {
    position_gens[g.front().position].push_back(g.front().monomial);
  }

  // prime support -> per-position irreducible components
  std::vector<std::pair<std::vector<bool>, std::vector<std::vector<PowerVector>>>> groups;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<PowerVector> comps;
    if (position_gens[i].empty()) {
      comps.push_back(PowerVector(nv, 0));  // zero ideal, prime ⟨0⟩
    } else {
      comps = irreducible_decomposition(position_gens[i], nv);
    }
    for (auto& c : comps) {
      auto support = support_of(c);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == support; });
      if (it == groups.end()) {
        groups.push_back({support, std::vector<std::vector<PowerVector>>(rank)});
        it = groups.end() - 1;
      }
      it->second[i].push_back(std::move(c));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return support_less(a.first, b.first); });

  std::vector<PrimaryComponent> components;
  for (const auto& [support, per_position] : groups) {
    std::vector<ModuleVector> gens;
    for (std::size_t i = 0; i < rank; ++i) {
      const auto e = ModuleVector::basis(ctx, i);
      if (per_position[i].empty()) {
        gens.push_back(e);
        continue;
      }
      std::vector<Ideal> parts;
      for (const auto& p : per_position[i]) parts.push_back(ideal_of_powers(ring, p));
      const Ideal merged = ideal_intersect_all(ring, parts);
      for (const auto& f : merged.reduced_gb()) gens.push_back(f * e);
    }
    const std::size_t k = components.size() + 1;
    components.push_back({Submodule(ctx, std::move(gens)), prime_of_support(ring, support),
                          "Q" + std::to_string(k), "p" + std::to_string(k)});
  }
  return Decomposition(n, std::move(components));
}

namespace {

void hitting_sets(const std::vector<std::vector<bool>>& supports, std::vector<bool>& chosen,
                  std::vector<std::vector<bool>>& out) {
  for (const auto& s : supports) {
    bool hit = false;
    for (std::size_t j = 0; j < s.size() && !hit; ++j) hit = s[j] && chosen[j];
    if (hit) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!s[j]) continue;
      chosen[j] = true;
      hitting_sets(supports, chosen, out);
      chosen[j] = false;
    }
    return;
  }
  out.push_back(chosen);
}

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] && !b[j]) return false;
  }
  return true;
}

}  // namespace

std::vector<Ideal> minimal_primes_monomial(const Ideal& ideal) {
  if (!ideal.is_monomial()) {
    throw PreconditionError("minimal primes: the ideal is not monomial");
  }
  const auto& ring = ideal.ring();
  const std::size_t nv = ring->num_vars();
  std::vector<std::vector<bool>> supports;
  for (const auto& g : ideal.reduced_gb()) {
    const Monomial& m = g.leading_term().monomial;
    if (m.is_one()) return {};
    std::vector<bool> s(nv);
    for (std::size_t j = 0; j < nv; ++j) s[j] = m[j] > 0;
    supports.push_back(std::move(s));
  }
  std::vector<std::vector<bool>> covers;
  std::vector<bool> chosen(nv, false);
  hitting_sets(supports, chosen, covers);
  std::sort(covers.begin(), covers.end(), support_less);
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<std::vector<bool>> minimal;
  for (const auto& c : covers) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const std::vector<bool>& m) { return subset_of(m, c); });
    if (!dominated) minimal.push_back(c);
  }
  std::vector<Ideal> out;
  for (const auto& m : minimal) out.push_back(prime_of_support(ring, m));
  return out;
}

std::vector<std::size_t> isolated_components(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < d.size() && minimal; ++j) {
      if (j == i) continue;
      minimal = !(d[j].prime.is_subset_of(d[i].prime) && !(d[j].prime == d[i].prime));
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

QuasiPrimarySplit quasi_primary_split(const Decomposition& d) {
  const auto& ring = d.target().context()->ring();
  const auto& ctx = d.target().context();
  const auto iso = isolated_components(d);

  std::vector<QuasiPrimaryGroup> groups;
  std::vector<Polynomial> separators;
  for (std::size_t i : iso) {
    const Ideal& own = d[i].prime;
    std::vector<Ideal> others;
    for (std::size_t j : iso) {
      if (j != i) others.push_back(d[j].prime);
    }
    const Ideal meet = ideal_intersect_all(ring, others);
    std::optional<Polynomial> separator;
    for (const auto& g : meet.reduced_gb()) {
      if (!own.contains(g)) {
        separator = g;
        break;
      }
    }
    if (!separator) {
      // Prime avoidance: one generator of each other prime outside own.
      Polynomial product = Polynomial::constant(ring, 1);
      bool found = true;
      for (const auto& other : others) {
        bool picked = false;
        for (const auto& g : other.reduced_gb()) {
          if (!own.contains(g)) {
            product = product * g;
            picked = true;
            break;
          }
        }
        found = found && picked;
      }
      if (found && !own.contains(product)) separator = product;
    }
    if (!separator) {
      throw std::logic_error("quasi-primary split: no separator for " + d[i].prime_label);
    }

    std::vector<PrimaryComponent> members;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (!d[k].prime.contains(*separator)) members.push_back(d[k]);
    }
    auto sat = stable_quotient(d.target(), *separator);
    const std::size_t e = std::max<std::size_t>(sat.iterations, 1);
    separators.push_back(separator->pow(static_cast<unsigned>(e)));
    groups.push_back(
        {i, *separator, e, Decomposition(std::move(sat.module), std::move(members))});
  }

  const Ideal j_ideal(ring, separators);
  Submodule remainder = sum(d.target(), ideal_module_product(j_ideal, Submodule::whole(ctx)));
  return {std::move(groups), std::move(remainder)};
}

std::vector<std::size_t> closure_components(const Decomposition& d, const Ideal& p) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].prime.is_subset_of(p)) kept.push_back(i);
  }
  return kept;
}

Submodule closure(const Decomposition& d, const Ideal& p) {
  if (!annihilator(d.target()).is_subset_of(p)) {
    throw PreconditionError("closure: (N : M) is not contained in the prime");
  }
  std::vector<Submodule> kept;
  for (std::size_t i : closure_components(d, p)) kept.push_back(d[i].primary);
  return intersect_all(d.target().context(), kept);
}

DecompositionOracle::DecompositionOracle(Mode mode, VerifyOptions options)
    : mode_(mode), options_(options) {}

void DecompositionOracle::add_fixture(Decomposition d) {
  const auto report = verify_decomposition(d, options_);
  if (!report.valid()) {
    throw PreconditionError("fixture decomposition is invalid:\n" + to_string(report, d));
  }
  std::string key = to_string(d.target());
  fixtures_.insert_or_assign(std::move(key), std::move(d));
}

std::optional<Decomposition> DecompositionOracle::lookup(const Submodule& n) const {
  if (mode_ == Mode::Fail) return std::nullopt;
  auto it = fixtures_.find(to_string(n));
  if (it != fixtures_.end() && same_module(it->second.target().context(), n.context())) {
    return it->second;
  }
  if (mode_ == Mode::AutomaticMonomial && n.is_monomial() && !n.is_whole()) {
    return monomial_primary_decomposition(n);
  }
  return std::nullopt;
}

Decomposition DecompositionOracle::decompose(const Submodule& n) const {
  if (auto d = lookup(n)) return std::move(*d);
  const std::string basis = to_string(n);
  throw OracleMiss("no primary decomposition available for a non-monomial submodule", basis);
}

}  // namespace envrad
