#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace envrad {

using Rational = mpq_class;

/// Monomial orders understood by the ring.  Graded reverse lexicographic is
/// the only one required; the tag exists so contexts can say what they use.
enum class MonomialOrder { DegRevLex };

/// The ambient polynomial ring Q[x_1, ..., x_n].  Variables are ordered as
/// declared; that order is the one used by degrevlex comparisons.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> variable_names,
                       MonomialOrder order = MonomialOrder::DegRevLex);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_[i]; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingContext& other) const {
    return names_ == other.names_ && order_ == other.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> variable_names);

/// Value equality of ring contexts (pointer-equal contexts short-circuit).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector x^a.  The length is the number of ring variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  /// Exact quotient; the caller guarantees that `divisor` divides *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial pow(Exponent k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  boost::container::small_vector<Exponent, 6> exps_;
  Exponent degree_ = 0;
};

/// Degree reverse lexicographic comparison: higher total degree wins; on a
/// tie the monomial with the smaller exponent in the last differing variable
/// is the larger one.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b);

/// Renders x^2*y style text ("1" for the unit monomial).
std::string to_string(const Monomial& m, const RingContext& ring);

}  // namespace envrad
