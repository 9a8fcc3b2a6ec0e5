#pragma once

#include <compare>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envrad/polynomial.hpp"

namespace envrad {

/// The free module R^n.  Ideals are submodules of the rank-1 case.
class FreeModuleContext {
 public:
  FreeModuleContext(RingPtr ring, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }

  bool operator==(const FreeModuleContext& other) const {
    return rank_ == other.rank_ && same_ring(ring_, other.ring_);
  }

 private:
  RingPtr ring_;
  std::size_t rank_;
};

using ModulePtr = std::shared_ptr<const FreeModuleContext>;

ModulePtr make_free_module(RingPtr ring, std::size_t rank);
bool same_module(const ModulePtr& a, const ModulePtr& b);

/// c * x^a * e_{position+1}.  Positions are zero-based internally and
/// printed one-based.
struct ModuleTerm {
  Monomial monomial;
  Rational coefficient;
  std::size_t position = 0;

  bool operator==(const ModuleTerm& other) const {
    return position == other.position && monomial == other.monomial &&
           coefficient == other.coefficient;
  }
};

/// Position-over-term: the lower basis index is larger (e1 > e2 > ...),
/// ties are broken by degrevlex.  Coefficients are ignored.
std::strong_ordering module_term_compare(const ModuleTerm& a, const ModuleTerm& b);

/// An element of R^n, stored componentwise.
class ModuleVector {
 public:
  explicit ModuleVector(ModulePtr context);
  ModuleVector(ModulePtr context, std::vector<Polynomial> components);

  static ModuleVector basis(ModulePtr context, std::size_t position);
  /// Terms may come in any order; equal (position, monomial) pairs add up.
  static ModuleVector from_terms(ModulePtr context, std::span<const ModuleTerm> terms);

  const ModulePtr& context() const { return context_; }
  std::size_t rank() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }
  bool is_zero() const;

  /// All terms, descending in the module order.
  std::vector<ModuleTerm> terms() const;
  std::optional<ModuleTerm> leading_term() const;
  std::size_t term_count() const;

  ModuleVector operator-() const;
  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator*(const Polynomial& f, const ModuleVector& v);
  friend ModuleVector operator*(const Rational& c, const ModuleVector& v);

  bool operator==(const ModuleVector& other) const;

 private:
  ModulePtr context_;
  std::vector<Polynomial> components_;
};

ModuleVector scalar_mul(const Polynomial& f, const ModuleVector& v);

/// "x*z*e3 - z*e1" style rendering, terms descending in the module order.
std::string to_string(const ModuleVector& v);
std::ostream& operator<<(std::ostream& os, const ModuleVector& v);

}  // namespace envrad
