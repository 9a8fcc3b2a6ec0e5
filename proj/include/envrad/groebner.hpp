#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "envrad/free_module.hpp"

namespace envrad {

/// Low-level term-list representation used by the Buchberger engine.  A
/// TermVector holds nonzero terms sorted descending in some ModuleOrder.
using TermVector = std::vector<ModuleTerm>;

/// Module monomial order.  With `elimination_vars == 0` this is the
/// position-over-term order of module_term_compare.  Otherwise the total
/// degree in the first `elimination_vars` ring variables is compared first,
/// which makes those variables eliminable across all positions.
struct ModuleOrder {
  std::size_t elimination_vars = 0;

  std::strong_ordering operator()(const ModuleTerm& a, const ModuleTerm& b) const;
};

namespace gb {

/// Reduced Groebner basis of the span of `generators`: monic, auto-reduced,
/// sorted descending by leading term.  Input vectors must already be sorted
/// for `order`.  `rank_one` enables the coprime-leading-monomial criterion,
/// which is only sound for ideals.
std::vector<TermVector> reduced_basis(std::vector<TermVector> generators,
                                      const ModuleOrder& order, bool rank_one);

/// Drops elements whose leading term is divisible by another lead, then
/// tail-reduces and normalizes the survivors.  Input must be a Groebner basis.
std::vector<TermVector> auto_reduce(std::vector<TermVector> basis,
                                    const ModuleOrder& order);

/// Fully reduced remainder of `v` modulo `basis`.
TermVector normal_form(TermVector v, std::span<const TermVector> basis,
                       const ModuleOrder& order);

TermVector to_terms(const ModuleVector& v);
ModuleVector from_terms(const ModulePtr& context, const TermVector& terms);

}  // namespace gb

/// Reduced Groebner basis of the submodule generated by `generators`
/// (position-over-term order).  An empty list gives the zero submodule.
std::vector<ModuleVector> buchberger(const ModulePtr& context,
                                     std::span<const ModuleVector> generators);

/// Finitely generated submodule of R^n.  The reduced Groebner basis is
/// computed once at construction, so values are immutable afterwards and can
/// be shared between threads.  Equality is equality of reduced bases.
class Submodule {
 public:
  Submodule(ModulePtr context, std::vector<ModuleVector> generators);

  static Submodule zero(ModulePtr context);
  /// The whole module M = R^n.
  static Submodule whole(ModulePtr context);
  /// Trusts that `basis` is already a Groebner basis in the default order
  /// (it is only inter-reduced and normalized).
  static Submodule from_groebner_basis(ModulePtr context,
                                       std::vector<TermVector> basis);

  const ModulePtr& context() const { return context_; }
  std::size_t rank() const { return context_->rank(); }
  const std::vector<ModuleVector>& generators() const { return generators_; }
  const std::vector<ModuleVector>& reduced_gb() const { return gb_; }
  const std::vector<TermVector>& basis_terms() const { return gb_terms_; }

  bool is_zero() const { return gb_.empty(); }
  bool is_whole() const;
  /// Every reduced-basis element is a single term.
  bool is_monomial() const;

  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const;
  bool is_subset_of(const Submodule& other) const;

  bool operator==(const Submodule& other) const;

 private:
  Submodule(ModulePtr context, std::vector<ModuleVector> generators,
            std::vector<TermVector> gb_terms);

  ModulePtr context_;
  std::vector<ModuleVector> generators_;
  std::vector<TermVector> gb_terms_;
  std::vector<ModuleVector> gb_;
};

ModuleVector normal_form(const ModuleVector& v, const Submodule& n);
bool contains(const Submodule& n, const ModuleVector& v);
bool submodule_eq(const Submodule& a, const Submodule& b);
/// a is contained in b.
bool submodule_leq(const Submodule& a, const Submodule& b);

/// Reduced basis, one generator per line; the zero submodule prints as "0".
std::string to_string(const Submodule& n);

/// An ideal of R, represented as a submodule of R^1.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  explicit Ideal(Submodule rank_one);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return sub_.context()->ring(); }
  const Submodule& as_submodule() const { return sub_; }
  std::vector<Polynomial> generators() const;
  std::vector<Polynomial> reduced_gb() const;

  bool is_zero() const { return sub_.is_zero(); }
  bool is_unit() const { return sub_.is_whole(); }
  bool is_monomial() const { return sub_.is_monomial(); }
  bool contains(const Polynomial& f) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool is_subset_of(const Ideal& other) const { return sub_.is_subset_of(other.sub_); }

  bool operator==(const Ideal& other) const { return sub_ == other.sub_; }

 private:
  Submodule sub_;
};

/// Generators of the reduced basis, comma separated ("0" for the zero ideal).
std::string to_string(const Ideal& ideal);

}  // namespace envrad
