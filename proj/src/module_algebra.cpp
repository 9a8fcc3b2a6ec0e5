#include "envrad/module_algebra.hpp"

#include <cassert>
#include <stdexcept>

#include "envrad/errors.hpp"

namespace envrad {

namespace {

void require_same_context(const Submodule& a, const Submodule& b) {
  if (!same_module(a.context(), b.context())) {
    throw ContextMismatch("submodules of different free modules");
  }
}

// Prepends the auxiliary variable t (with exponent `t_power`) to a monomial.
Monomial with_t(const Monomial& m, Monomial::Exponent t_power) {
  Monomial out(m.size() + 1);
  out.set(0, t_power);
  for (std::size_t i = 0; i < m.size(); ++i) out.set(i + 1, m[i]);
  return out;
}

Monomial drop_t(const Monomial& m) {
  return Monomial(m.exponents().subspan(1));
}

}  // namespace

Submodule sum(const Submodule& n, const Submodule& l) {
  require_same_context(n, l);
  std::vector<ModuleVector> gens(n.reduced_gb());
  gens.insert(gens.end(), l.reduced_gb().begin(), l.reduced_gb().end());
  return Submodule(n.context(), std::move(gens));
}

Submodule intersect(const Submodule& n, const Submodule& l) {
  require_same_context(n, l);
  if (n.is_zero() || l.is_zero()) return Submodule::zero(n.context());
  if (n.is_whole()) return l;
  if (l.is_whole()) return n;

  const ModuleOrder elim{1};
  auto sorted = [&](TermVector v) {
    std::sort(v.begin(), v.end(),
              [&](const ModuleTerm& a, const ModuleTerm& b) { return elim(a, b) > 0; });
    return v;
  };

  std::vector<TermVector> gens;
  for (const auto& g : n.basis_terms()) {
    TermVector v;
    for (const auto& t : g) v.push_back({with_t(t.monomial, 1), t.coefficient, t.position});
    gens.push_back(sorted(std::move(v)));
  }
  for (const auto& g : l.basis_terms()) {
    TermVector v;
    for (const auto& t : g) {
      v.push_back({with_t(t.monomial, 0), t.coefficient, t.position});
      v.push_back({with_t(t.monomial, 1), -t.coefficient, t.position});
    }
    gens.push_back(sorted(std::move(v)));
  }

  auto basis = gb::reduced_basis(std::move(gens), elim, false);
  std::vector<TermVector> kept;
  for (auto& b : basis) {
    // With t eliminated first, a t-free lead means a t-free element.
    if (b.front().monomial[0] != 0) continue;
    TermVector v;
    v.reserve(b.size());
    for (auto& t : b) v.push_back({drop_t(t.monomial), std::move(t.coefficient), t.position});
    kept.push_back(std::move(v));
  }
  return Submodule::from_groebner_basis(n.context(), std::move(kept));
}

Submodule intersect_all(const ModulePtr& context, std::span<const Submodule> family) {
  if (family.empty()) return Submodule::whole(context);
  Submodule acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = intersect(acc, family[i]);
  return acc;
}

Submodule colon(const Submodule& n, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  detail::require_same_ring(f.ring(), n.context()->ring());
  if (f.is_constant()) return n;
  std::vector<ModuleVector> f_gens;
  for (std::size_t i = 0; i < n.rank(); ++i) {
    f_gens.push_back(f * ModuleVector::basis(n.context(), i));
  }
  const Submodule fm(n.context(), std::move(f_gens));
  const Submodule meet = intersect(n, fm);
  std::vector<ModuleVector> quotients;
  for (const auto& g : meet.reduced_gb()) {
    std::vector<Polynomial> comps;
    for (const auto& c : g.components()) {
      auto q = c.divide_exact(f);
      if (!q) throw std::logic_error("colon: inexact division by the colon element");
      comps.push_back(std::move(*q));
    }
    quotients.emplace_back(n.context(), std::move(comps));
  }
  return Submodule(n.context(), std::move(quotients));
}

Submodule colon(const Submodule& n, const Ideal& ideal) {
  detail::require_same_ring(ideal.ring(), n.context()->ring());
  if (ideal.is_zero()) return Submodule::whole(n.context());
  std::vector<Submodule> parts;
  for (const auto& f : ideal.reduced_gb()) parts.push_back(colon(n, f));
  return intersect_all(n.context(), parts);
}

Ideal annihilator(const Submodule& n) {
  const auto& ring = n.context()->ring();
  const std::size_t rank = n.rank();
  if (rank == 1) return Ideal(n);
  auto ring_module = make_free_module(ring, 1);
  std::vector<Ideal> positional;
  for (std::size_t i = 0; i < rank; ++i) {
    // Reorder so position i comes last: under position-over-term the basis
    // elements led by the last position are exactly N ∩ R*e_i.
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < rank; ++k) {
      if (k != i) perm.push_back(k);
    }
    perm.push_back(i);
    std::vector<TermVector> gens;
    for (const auto& g : n.basis_terms()) {
      TermVector v;
      for (const auto& t : g) {
        const auto new_pos = static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), t.position) - perm.begin());
        v.push_back({t.monomial, t.coefficient, new_pos});
      }
      std::sort(v.begin(), v.end(), [](const ModuleTerm& a, const ModuleTerm& b) {
        return module_term_compare(a, b) > 0;
      });
      gens.push_back(std::move(v));
    }
    auto basis = gb::reduced_basis(std::move(gens), ModuleOrder{}, false);
    std::vector<Polynomial> polys;
    for (const auto& b : basis) {
      if (b.front().position != rank - 1) continue;
      std::vector<PolyTerm> terms;
      for (const auto& t : b) terms.push_back({t.monomial, t.coefficient});
      polys.emplace_back(ring, std::move(terms));
    }
    positional.emplace_back(ring, std::move(polys));
  }
  return ideal_intersect_all(ring, positional);
}

SaturationResult stable_quotient(const Submodule& n, const Ideal& ideal) {
  detail::require_same_ring(ideal.ring(), n.context()->ring());
  if (ideal.is_zero()) throw PreconditionError("stable quotient by the zero ideal");
  Submodule current = n;
  std::size_t steps = 0;
  for (;;) {
    Submodule next = colon(current, ideal);
    ++steps;
    if (next == current) return {std::move(current), steps};
    current = std::move(next);
  }
}

SaturationResult stable_quotient(const Submodule& n, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("stable quotient by the zero ideal");
  return stable_quotient(n, Ideal(f.ring(), {f}));
}

Submodule ideal_module_product(const Ideal& ideal, const Submodule& l) {
  detail::require_same_ring(ideal.ring(), l.context()->ring());
  std::vector<ModuleVector> gens;
  for (const auto& f : ideal.reduced_gb()) {
    for (const auto& v : l.reduced_gb()) gens.push_back(f * v);
  }
  return Submodule(l.context(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  return Ideal(sum(a.as_submodule(), b.as_submodule()));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  return Ideal(intersect(a.as_submodule(), b.as_submodule()));
}

Ideal ideal_intersect_all(const RingPtr& ring, std::span<const Ideal> family) {
  if (family.empty()) return Ideal::unit(ring);
  Ideal acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = ideal_intersect(acc, family[i]);
  return acc;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  return Ideal(ideal_module_product(a, b.as_submodule()));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal acc = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

}  // namespace envrad
