#pragma once

#include <span>

#include "envrad/groebner.hpp"

namespace envrad {

Submodule sum(const Submodule& n, const Submodule& l);

/// N ∩ L by elimination: a basis of t*N + (1-t)*L is computed in an order
/// that eliminates the auxiliary variable t, and the t-free part is kept.
Submodule intersect(const Submodule& n, const Submodule& l);

/// Intersection of a family; the empty family gives the whole module.
Submodule intersect_all(const ModulePtr& context, std::span<const Submodule> family);

/// N : f = {m in M : f*m in N}.  Throws PreconditionError for f = 0.
Submodule colon(const Submodule& n, const Polynomial& f);

/// N : I = {m in M : I*m ⊆ N}.
Submodule colon(const Submodule& n, const Ideal& ideal);

/// (N : M) = {r in R : r*M ⊆ N}.
Ideal annihilator(const Submodule& n);

struct SaturationResult {
  Submodule module;
  /// Number of colon steps taken until the chain became stationary.
  std::size_t iterations = 0;
};

/// N : I^∞ computed as the stationary value of L_{k+1} = L_k : I.
/// Throws PreconditionError when I is the zero ideal.
SaturationResult stable_quotient(const Submodule& n, const Ideal& ideal);
SaturationResult stable_quotient(const Submodule& n, const Polynomial& f);

/// I*L, generated by all products of generators.
Submodule ideal_module_product(const Ideal& ideal, const Submodule& l);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect_all(const RingPtr& ring, std::span<const Ideal> family);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);

}  // namespace envrad
