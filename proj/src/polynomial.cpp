#include "envrad/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "envrad/errors.hpp"

namespace envrad {

namespace detail {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw ContextMismatch("operands belong to different polynomial rings");
  }
}

void append_term(std::string& out, const Rational& coefficient,
                 const Monomial& m, const RingContext& ring,
                 std::string_view basis, bool first) {
  const bool negative = sgn(coefficient) < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational magnitude = abs(coefficient);
  std::string factors;
  if (!m.is_one()) factors = to_string(m, ring);
  if (!basis.empty()) {
    if (!factors.empty()) factors += '*';
    factors += basis;
  }
  if (factors.empty()) {
    out += magnitude.get_str();
  } else if (magnitude == 1) {
    out += factors;
  } else {
    out += magnitude.get_str();
    out += '*';
    out += factors;
  }
}

}  // namespace detail

namespace {

// mpq_class(num, den) is not reduced on construction.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}


bool term_greater(const PolyTerm& a, const PolyTerm& b) {
  return monomial_compare(a.monomial, b.monomial) > 0;
}

// Merges two descending term lists computing a + scale * b.
std::vector<PolyTerm> merge_terms(std::span<const PolyTerm> a,
                                  std::span<const PolyTerm> b,
                                  const Rational& scale) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = monomial_compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, scale * b[j].coefficient});
      ++j;
    } else {
      Rational c = a[i].coefficient + scale * b[j].coefficient;
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, scale * b[j].coefficient});
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<PolyTerm> terms)
    : ring_(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.monomial.size() != ring_->num_vars()) {
      throw ContextMismatch("monomial length does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
    } else {
      if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const std::size_t n = ring->num_vars();
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {PolyTerm{Monomial(n), canonical(c)}}, true);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->num_vars();
  return Polynomial(std::move(ring), {PolyTerm{Monomial::variable(n, index), 1}},
                    true);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->num_vars()) {
    throw ContextMismatch("monomial length does not match the ring");
  }
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {PolyTerm{std::move(m), canonical(c)}}, true);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::size_t Polynomial::total_degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  std::vector<PolyTerm> out(terms_);
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  detail::require_same_ring(a.ring_, b.ring_);
  return Polynomial(a.ring_, merge_terms(a.terms_, b.terms_, 1), true);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  detail::require_same_ring(a.ring_, b.ring_);
  return Polynomial(a.ring_, merge_terms(a.terms_, b.terms_, -1), true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  detail::require_same_ring(a.ring_, b.ring_);
  std::vector<PolyTerm> acc;
  for (const auto& t : a.terms_) {
    auto row = b.multiply_term(t.monomial, t.coefficient);
    acc = merge_terms(acc, row.terms_, 1);
  }
  return Polynomial(a.ring_, std::move(acc), true);
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial(p.ring_);
  const Rational k = canonical(c);
  std::vector<PolyTerm> out(p.terms_);
  for (auto& t : out) t.coefficient *= k;
  return Polynomial(p.ring_, std::move(out), true);
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coefficient * c});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coefficient == 1) return *this;
  Rational inv = 1 / terms_.front().coefficient;
  return inv * *this;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  detail::require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  const PolyTerm& lead = divisor.leading_term();
  std::vector<PolyTerm> quotient;
  std::vector<PolyTerm> rest = terms_;
  while (!rest.empty()) {
    const PolyTerm& t = rest.front();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    PolyTerm q{t.monomial / lead.monomial, t.coefficient / lead.coefficient};
    auto shifted = divisor.multiply_term(q.monomial, q.coefficient);
    rest = merge_terms(rest, shifted.terms_, -1);
    quotient.push_back(std::move(q));
  }
  return Polynomial(ring_, std::move(quotient), true);
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    detail::append_term(out, t.coefficient, t.monomial, *p.ring(), {}, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_string(p);
}

}  // namespace envrad
