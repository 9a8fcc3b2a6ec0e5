#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "envrad/ring.hpp"

namespace envrad {

struct PolyTerm {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const PolyTerm& other) const {
    return monomial == other.monomial && coefficient == other.coefficient;
  }
};

/// Sparse polynomial over Q.  Terms are stored in descending degrevlex order
/// with nonzero coefficients; the zero polynomial has no terms.  Values are
/// immutable once built.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<PolyTerm> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  std::span<const PolyTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_term() const { return terms_.size() == 1; }
  /// Precondition: nonzero.
  const PolyTerm& leading_term() const { return terms_.front(); }
  std::size_t total_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  Polynomial multiply_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Quotient q with q * divisor == *this, or nullopt when the division is
  /// not exact.  Throws PreconditionError on a zero divisor.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Value equality; polynomials over different rings compare unequal.
  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(RingPtr ring, std::vector<PolyTerm> terms, bool canonical)
      : ring_(std::move(ring)), terms_(std::move(terms)) {
    (void)canonical;
  }

  RingPtr ring_;
  std::vector<PolyTerm> terms_;
};

std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

namespace detail {

/// Appends one signed term "c*m*basis" to `out`.  `first` controls whether a
/// leading "+" separator is written.  An empty `basis` renders a scalar term.
void append_term(std::string& out, const Rational& coefficient,
                 const Monomial& m, const RingContext& ring,
                 std::string_view basis, bool first);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace detail

}  // namespace envrad
