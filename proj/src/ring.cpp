#include "envrad/ring.hpp"

#include <algorithm>
#include <set>

#include "envrad/errors.hpp"

namespace envrad {

RingContext::RingContext(std::vector<std::string> variable_names,
                         MonomialOrder order)
    : names_(std::move(variable_names)), order_(order) {
  if (names_.empty()) {
    throw PreconditionError("a ring needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(name).second) {
      throw PreconditionError("duplicate variable name '" + name + "'");
    }
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> variable_names) {
  return std::make_shared<const RingContext>(std::move(variable_names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps)
    : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index,
                            Exponent power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r(*this);
  for (auto& e : r.exps_) e *= k;
  r.degree_ = degree_ * k;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m, const RingContext& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace envrad
