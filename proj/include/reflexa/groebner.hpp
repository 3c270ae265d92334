#pragma once

#include <optional>
#include <vector>

#include "reflexa/ring.hpp"

namespace reflexa {

// An element of a free module Lambda^n: one polynomial per coordinate,
// coordinates kept in normal form with respect to the ring.
struct FreeVector {
  RingPtr ring;
  std::vector<Poly> c;

  static FreeVector zero(const RingPtr& r, std::size_t rank);
  static FreeVector unit(const RingPtr& r, std::size_t rank, std::size_t pos);

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;
  FreeVector operator+(const FreeVector& o) const;
  FreeVector operator-(const FreeVector& o) const;
  FreeVector times(const Poly& f) const;  // coordinates reduced afterwards
  bool operator==(const FreeVector& o) const;
};

// Leading position/monomial of a free vector under the position-over-term
// order. Positions are compared by ascending index: a term in a lower
// position beats any term in a higher one.
struct ModuleTerm {
  std::size_t pos;
  Monomial m;
};
std::optional<ModuleTerm> leading_term(const std::vector<Poly>& v);

// The position-over-term module order induced by a base monomial order.
struct ModuleOrder {
  MonomialOrder base;
  // GT when (pa,a) is greater than (pb,b).
  Ordering compare(std::size_t pa, const Monomial& a, std::size_t pb, const Monomial& b) const;
};

// A Groebner basis of a submodule of Lambda^rank.  Over a quotient ring the
// basis is computed in the ambient polynomial ring with the defining-ideal
// generators adjoined in every coordinate, so normal forms land directly in
// the quotient's canonical representatives.
struct GroebnerBasis {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<std::vector<Poly>> elems;  // reduced, monic, descending leading terms
  bool reduced = true;
};

// Buchberger's algorithm with normal pair selection, the coprime criterion
// (ideal case) and the chain criterion.  Deterministic for fixed input.
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank,
                         const std::vector<FreeVector>& gens);

FreeVector normal_form(const FreeVector& v, const GroebnerBasis& G);

// Generators of the syzygy module {s in Lambda^m : sum s_i gens_i = 0},
// pruned to an irredundant generating set, each in normal form.
std::vector<FreeVector> syzygy_basis(const RingPtr& ring, std::size_t rank,
                                     const std::vector<FreeVector>& gens);

// Generators of {v in Lambda^cols : A v = 0} for an m x n matrix given by
// its columns.
std::vector<FreeVector> kernel_of_columns(const RingPtr& ring, std::size_t rank,
                                          const std::vector<FreeVector>& cols);

// Membership of v in the submodule spanned by gens; on success returns lift
// coordinates c with sum c_i gens_i = v in Lambda^rank.
std::optional<std::vector<Poly>> submodule_lift(const RingPtr& ring, std::size_t rank,
                                                const FreeVector& v,
                                                const std::vector<FreeVector>& gens);
bool in_submodule(const RingPtr& ring, std::size_t rank, const FreeVector& v,
                  const std::vector<FreeVector>& gens);

// Drops generators that lie in the span of the remaining ones; deterministic.
std::vector<FreeVector> prune_generators(const RingPtr& ring, std::size_t rank,
                                         std::vector<FreeVector> gens);

// The colon ideal {f : f*J <= I}.
Ideal colon_ideal(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
// Reduced Groebner basis of an ideal of the quotient ring (defining ideal
// included), the canonical form used by ideal_equal.
std::vector<Poly> reduced_ideal_basis(const Ideal& I);

}  // namespace reflexa
