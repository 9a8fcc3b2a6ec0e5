#include "envrad/groebner.hpp"

#include <algorithm>

#include "envrad/errors.hpp"

namespace envrad {

std::strong_ordering ModuleOrder::operator()(const ModuleTerm& a,
                                             const ModuleTerm& b) const {
  if (elimination_vars > 0) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < elimination_vars; ++i) {
      da += a.monomial[i];
      db += b.monomial[i];
    }
    if (da != db) return da <=> db;
  }
  return module_term_compare(a, b);
}

namespace gb {

namespace {

// a[from..] + c * m * b, merged in `order`.
TermVector add_scaled(const TermVector& a, std::size_t from, const Rational& c,
                      const Monomial& m, const TermVector& b,
                      const ModuleOrder& order) {
  TermVector out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.size()) {
    ModuleTerm shifted{b[j].monomial * m, c * b[j].coefficient, b[j].position};
    auto cmp = order(a[i], shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(shifted));
      ++j;
    } else {
      shifted.coefficient += a[i].coefficient;
      if (shifted.coefficient != 0) out.push_back(std::move(shifted));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].monomial * m, c * b[j].coefficient, b[j].position});
  }
  return out;
}

void make_monic(TermVector& v) {
  if (v.empty() || v.front().coefficient == 1) return;
  const Rational inv = 1 / v.front().coefficient;
  for (auto& t : v) t.coefficient *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  ModuleTerm lcm;
};

TermVector s_vector(const TermVector& f, const TermVector& g, const Monomial& l,
                    const ModuleOrder& order) {
  // Both inputs are monic.
  TermVector scaled_f;
  scaled_f.reserve(f.size());
  const Monomial mf = l / f.front().monomial;
  for (const auto& t : f) scaled_f.push_back({t.monomial * mf, t.coefficient, t.position});
  return add_scaled(scaled_f, 0, -1, l / g.front().monomial, g, order);
}

}  // namespace

TermVector normal_form(TermVector v, std::span<const TermVector> basis,
                       const ModuleOrder& order) {
  TermVector remainder;
  std::size_t head = 0;
  while (head < v.size()) {
    const ModuleTerm& t = v[head];
    const TermVector* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.front().position == t.position && g.front().monomial.divides(t.monomial)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(std::move(v[head]));
      ++head;
      continue;
    }
    const Rational c = -t.coefficient / reducer->front().coefficient;
    const Monomial m = t.monomial / reducer->front().monomial;
    v = add_scaled(v, head, c, m, *reducer, order);
    head = 0;
  }
  return remainder;
}

std::vector<TermVector> auto_reduce(std::vector<TermVector> basis,
                                    const ModuleOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const TermVector& a, const TermVector& b) {
    auto cmp = order(a.front(), b.front());
    if (cmp != 0) return cmp > 0;
    return a.size() < b.size();
  });
  std::vector<TermVector> minimal;
  for (std::size_t k = basis.size(); k-- > 0;) {
    const ModuleTerm& lt = basis[k].front();
    bool redundant = false;
    for (const auto& m : minimal) {
      if (m.front().position == lt.position && m.front().monomial.divides(lt.monomial)) {
        redundant = true;
        break;
      }
    }
    // Only smaller leads can divide this one, and those were visited first.
    if (!redundant) minimal.push_back(std::move(basis[k]));
  }
  std::vector<TermVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<TermVector> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    TermVector lead{minimal[k].front()};
    TermVector tail(minimal[k].begin() + 1, minimal[k].end());
    TermVector rem = normal_form(std::move(tail), others, order);
    lead.insert(lead.end(), std::make_move_iterator(rem.begin()),
                std::make_move_iterator(rem.end()));
    make_monic(lead);
    reduced.push_back(std::move(lead));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermVector& a, const TermVector& b) {
    return order(a.front(), b.front()) > 0;
  });
  return reduced;
}

std::vector<TermVector> reduced_basis(std::vector<TermVector> generators,
                                      const ModuleOrder& order, bool rank_one) {
  std::vector<TermVector> basis;
  std::vector<Pair> pairs;

  auto add = [&](TermVector h) {
    make_monic(h);
    const ModuleTerm& lh = h.front();
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.lcm.position != lh.position || !lh.monomial.divides(p.lcm.monomial)) {
        return false;
      }
      const Monomial li = lcm(basis[p.i].front().monomial, lh.monomial);
      const Monomial lj = lcm(basis[p.j].front().monomial, lh.monomial);
      return !(li == p.lcm.monomial) && !(lj == p.lcm.monomial);
    });
    const std::size_t r = basis.size();
    for (std::size_t i = 0; i < r; ++i) {
      const ModuleTerm& li = basis[i].front();
      // S-vectors of leads in different positions vanish.
      if (li.position != lh.position) continue;
      if (rank_one && coprime(li.monomial, lh.monomial)) continue;
      pairs.push_back({i, r, ModuleTerm{lcm(li.monomial, lh.monomial), 1, lh.position}});
    }
    basis.push_back(std::move(h));
  };

  for (auto& g : generators) {
    if (g.empty()) continue;
    TermVector h = normal_form(std::move(g), basis, order);
    if (!h.empty()) add(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first, earliest pair on ties.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (order(it->lcm, best->lcm) < 0) best = it;
    }
    const Pair p = *best;
    pairs.erase(best);
    TermVector s = s_vector(basis[p.i], basis[p.j], p.lcm.monomial, order);
    TermVector h = normal_form(std::move(s), basis, order);
    if (!h.empty()) add(std::move(h));
  }
  if (basis.empty()) return basis;
  return auto_reduce(std::move(basis), order);
}

TermVector to_terms(const ModuleVector& v) { return v.terms(); }

ModuleVector from_terms(const ModulePtr& context, const TermVector& terms) {
  return ModuleVector::from_terms(context, terms);
}

}  // namespace gb

namespace {

void check_generators(const ModulePtr& context, std::span<const ModuleVector> gens) {
  for (const auto& g : gens) {
    if (!same_module(context, g.context())) {
      throw ContextMismatch("generator belongs to a different free module");
    }
  }
}

}  // namespace

std::vector<ModuleVector> buchberger(const ModulePtr& context,
                                     std::span<const ModuleVector> generators) {
  check_generators(context, generators);
  std::vector<TermVector> terms;
  terms.reserve(generators.size());
  for (const auto& g : generators) terms.push_back(g.terms());
  auto basis = gb::reduced_basis(std::move(terms), ModuleOrder{}, context->rank() == 1);
  std::vector<ModuleVector> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(ModuleVector::from_terms(context, b));
  return out;
}

Submodule::Submodule(ModulePtr context, std::vector<ModuleVector> generators)
    : context_(std::move(context)), generators_(std::move(generators)) {
  check_generators(context_, generators_);
  std::vector<TermVector> terms;
  terms.reserve(generators_.size());
  for (const auto& g : generators_) terms.push_back(g.terms());
  gb_terms_ = gb::reduced_basis(std::move(terms), ModuleOrder{}, context_->rank() == 1);
  gb_.reserve(gb_terms_.size());
  for (const auto& b : gb_terms_) gb_.push_back(ModuleVector::from_terms(context_, b));
}

Submodule::Submodule(ModulePtr context, std::vector<ModuleVector> generators,
                     std::vector<TermVector> gb_terms)
    : context_(std::move(context)),
      generators_(std::move(generators)),
      gb_terms_(std::move(gb_terms)) {
  gb_.reserve(gb_terms_.size());
  for (const auto& b : gb_terms_) gb_.push_back(ModuleVector::from_terms(context_, b));
}

Submodule Submodule::zero(ModulePtr context) { return Submodule(std::move(context), {}); }

Submodule Submodule::whole(ModulePtr context) {
  std::vector<ModuleVector> gens;
  for (std::size_t i = 0; i < context->rank(); ++i) {
    gens.push_back(ModuleVector::basis(context, i));
  }
  return Submodule(std::move(context), std::move(gens));
}

Submodule Submodule::from_groebner_basis(ModulePtr context,
                                         std::vector<TermVector> basis) {
  std::erase_if(basis, [](const TermVector& v) { return v.empty(); });
  std::vector<TermVector> reduced;
  if (!basis.empty()) reduced = gb::auto_reduce(std::move(basis), ModuleOrder{});
  std::vector<ModuleVector> gens;
  gens.reserve(reduced.size());
  for (const auto& b : reduced) gens.push_back(ModuleVector::from_terms(context, b));
  return Submodule(std::move(context), std::move(gens), std::move(reduced));
}

bool Submodule::is_whole() const {
  std::vector<bool> hit(rank(), false);
  for (const auto& g : gb_terms_) {
    if (g.front().monomial.is_one()) hit[g.front().position] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool Submodule::is_monomial() const {
  return std::all_of(gb_terms_.begin(), gb_terms_.end(),
                     [](const TermVector& v) { return v.size() == 1; });
}

ModuleVector Submodule::normal_form(const ModuleVector& v) const {
  if (!same_module(context_, v.context())) {
    throw ContextMismatch("vector belongs to a different free module");
  }
  auto rem = gb::normal_form(v.terms(), gb_terms_, ModuleOrder{});
  return ModuleVector::from_terms(context_, rem);
}

bool Submodule::contains(const ModuleVector& v) const {
  if (!same_module(context_, v.context())) {
    throw ContextMismatch("vector belongs to a different free module");
  }
  return gb::normal_form(v.terms(), gb_terms_, ModuleOrder{}).empty();
}

bool Submodule::is_subset_of(const Submodule& other) const {
  if (!same_module(context_, other.context_)) {
    throw ContextMismatch("submodules of different free modules");
  }
  for (const auto& g : gb_terms_) {
    if (!gb::normal_form(g, other.gb_terms_, ModuleOrder{}).empty()) return false;
  }
  return true;
}

bool Submodule::operator==(const Submodule& other) const {
  if (!same_module(context_, other.context_)) {
    throw ContextMismatch("submodules of different free modules");
  }
  return gb_terms_ == other.gb_terms_;
}

ModuleVector normal_form(const ModuleVector& v, const Submodule& n) {
  return n.normal_form(v);
}
bool contains(const Submodule& n, const ModuleVector& v) { return n.contains(v); }
bool submodule_eq(const Submodule& a, const Submodule& b) { return a == b; }
bool submodule_leq(const Submodule& a, const Submodule& b) { return a.is_subset_of(b); }

std::string to_string(const Submodule& n) {
  if (n.is_zero()) return "0\n";
  std::string out;
  for (const auto& g : n.reduced_gb()) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<ModuleVector> as_rank_one(const ModulePtr& ctx,
                                      std::vector<Polynomial> polys) {
  std::vector<ModuleVector> out;
  out.reserve(polys.size());
  for (auto& p : polys) out.emplace_back(ctx, std::vector<Polynomial>{std::move(p)});
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : sub_([&] {
        auto ctx = make_free_module(ring, 1);
        for (const auto& g : generators) detail::require_same_ring(g.ring(), ring);
        return Submodule(ctx, as_rank_one(ctx, std::move(generators)));
      }()) {}

Ideal::Ideal(Submodule rank_one) : sub_(std::move(rank_one)) {
  if (sub_.rank() != 1) throw PreconditionError("an ideal must be a rank-1 submodule");
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

std::vector<Polynomial> Ideal::generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : sub_.generators()) out.push_back(g[0]);
  return out;
}

std::vector<Polynomial> Ideal::reduced_gb() const {
  std::vector<Polynomial> out;
  for (const auto& g : sub_.reduced_gb()) out.push_back(g[0]);
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  return sub_.contains(ModuleVector(sub_.context(), {f}));
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return sub_.normal_form(ModuleVector(sub_.context(), {f}))[0];
}

std::string to_string(const Ideal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.reduced_gb()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

}  // namespace envrad
