#include "envrad/free_module.hpp"

#include <ostream>

#include "envrad/errors.hpp"

namespace envrad {

namespace {

void require_same_module(const ModulePtr& a, const ModulePtr& b) {
  if (!same_module(a, b)) {
    throw ContextMismatch("operands belong to different free modules");
  }
}

}  // namespace

FreeModuleContext::FreeModuleContext(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), rank_(rank) {
  if (!ring_) throw PreconditionError("free module without a ring");
  if (rank_ == 0) throw PreconditionError("free module rank must be positive");
}

ModulePtr make_free_module(RingPtr ring, std::size_t rank) {
  return std::make_shared<const FreeModuleContext>(std::move(ring), rank);
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  return a == b || (a && b && *a == *b);
}

std::strong_ordering module_term_compare(const ModuleTerm& a, const ModuleTerm& b) {
  if (a.position != b.position) return b.position <=> a.position;
  return monomial_compare(a.monomial, b.monomial);
}

ModuleVector::ModuleVector(ModulePtr context) : context_(std::move(context)) {
  components_.assign(context_->rank(), Polynomial(context_->ring()));
}

ModuleVector::ModuleVector(ModulePtr context, std::vector<Polynomial> components)
    : context_(std::move(context)), components_(std::move(components)) {
  if (components_.size() != context_->rank()) {
    throw ContextMismatch("vector has " + std::to_string(components_.size()) +
                          " components, expected " +
                          std::to_string(context_->rank()));
  }
  for (const auto& c : components_) {
    detail::require_same_ring(c.ring(), context_->ring());
  }
}

ModuleVector ModuleVector::basis(ModulePtr context, std::size_t position) {
  if (position >= context->rank()) {
    throw PreconditionError("basis index out of range");
  }
  ModuleVector v(context);
  v.components_[position] = Polynomial::constant(context->ring(), 1);
  return v;
}

ModuleVector ModuleVector::from_terms(ModulePtr context,
                                      std::span<const ModuleTerm> terms) {
  std::vector<std::vector<PolyTerm>> buckets(context->rank());
  for (const auto& t : terms) {
    if (t.position >= context->rank()) {
      throw PreconditionError("basis index out of range");
    }
    buckets[t.position].push_back({t.monomial, t.coefficient});
  }
  std::vector<Polynomial> comps;
  comps.reserve(buckets.size());
  for (auto& b : buckets) comps.emplace_back(context->ring(), std::move(b));
  return ModuleVector(std::move(context), std::move(comps));
}

bool ModuleVector::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<ModuleTerm> ModuleVector::terms() const {
  std::vector<ModuleTerm> out;
  out.reserve(term_count());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (const auto& t : components_[i].terms()) {
      out.push_back({t.monomial, t.coefficient, i});
    }
  }
  return out;
}

std::optional<ModuleTerm> ModuleVector::leading_term() const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i].is_zero()) {
      const auto& t = components_[i].leading_term();
      return ModuleTerm{t.monomial, t.coefficient, i};
    }
  }
  return std::nullopt;
}

std::size_t ModuleVector::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

ModuleVector ModuleVector::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(-c);
  return ModuleVector(context_, std::move(comps));
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  require_same_module(a.context_, b.context_);
  std::vector<Polynomial> comps;
  comps.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) comps.push_back(a[i] + b[i]);
  return ModuleVector(a.context_, std::move(comps));
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
  require_same_module(a.context_, b.context_);
  std::vector<Polynomial> comps;
  comps.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) comps.push_back(a[i] - b[i]);
  return ModuleVector(a.context_, std::move(comps));
}

ModuleVector operator*(const Polynomial& f, const ModuleVector& v) {
  detail::require_same_ring(f.ring(), v.context_->ring());
  std::vector<Polynomial> comps;
  comps.reserve(v.rank());
  for (const auto& c : v.components_) comps.push_back(f * c);
  return ModuleVector(v.context_, std::move(comps));
}

ModuleVector operator*(const Rational& c, const ModuleVector& v) {
  std::vector<Polynomial> comps;
  comps.reserve(v.rank());
  for (const auto& p : v.components_) comps.push_back(c * p);
  return ModuleVector(v.context_, std::move(comps));
}

ModuleVector scalar_mul(const Polynomial& f, const ModuleVector& v) { return f * v; }

bool ModuleVector::operator==(const ModuleVector& other) const {
  return same_module(context_, other.context_) && components_ == other.components_;
}

std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  const RingContext& ring = *v.context()->ring();
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const std::string basis = "e" + std::to_string(i + 1);
    for (const auto& t : v[i].terms()) {
      detail::append_term(out, t.coefficient, t.monomial, ring, basis, first);
      first = false;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ModuleVector& v) {
  return os << to_string(v);
}

}  // namespace envrad
