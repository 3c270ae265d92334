#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflexa/poly.hpp"

namespace reflexa {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A quotient polynomial ring k[vars]/(defining ideal); an empty defining
// ideal is a plain polynomial ring. The reduced Groebner basis of the
// defining ideal is cached so elements have unique normal forms.
class Ring {
 public:
  static RingPtr polynomial(Field f, std::vector<std::string> vars, MonomialOrder order);
  static RingPtr polynomial(Field f, std::vector<std::string> vars);  // degrevlex
  // Quotient of `base` by additional generators; base may itself be a
  // quotient, in which case the defining ideals are combined.
  static RingPtr quotient(const RingPtr& base, std::vector<Poly> gens);

  const DescPtr& desc() const { return desc_; }
  const Field& field() const { return desc_->field; }
  std::size_t nvars() const { return desc_->nvars(); }
  bool is_polynomial_ring() const { return defining_.empty(); }
  // Reduced Groebner basis of the defining ideal, canonically sorted.
  const std::vector<Poly>& defining_basis() const { return defining_; }

  // Normal form of an ambient polynomial modulo the defining ideal; the
  // unique representative of its residue class.
  Poly nf(const Poly& p) const;
  bool is_zero_elem(const Poly& p) const { return nf(p).is_zero(); }
  // The reduced constant when nf(p) is a nonzero constant (hence a unit).
  std::optional<Coeff> unit_constant(const Poly& p) const;

  Poly zero() const { return Poly::zero(desc_); }
  Poly one() const { return Poly::constant(desc_, 1); }
  Poly var(std::size_t v) const { return Poly::variable(desc_, v); }

  bool same(const Ring& o) const;
  std::string str() const;

 private:
  Ring(DescPtr desc, std::vector<Poly> defining)
      : desc_(std::move(desc)), defining_(std::move(defining)) {}

  DescPtr desc_;
  std::vector<Poly> defining_;  // reduced GB, descending leading terms
};

void check_same_ring(const RingPtr& a, const RingPtr& b);

// A finitely generated ideal of a quotient ring; generators kept in normal
// form with zero generators dropped.
struct Ideal {
  RingPtr ring;
  std::vector<Poly> gens;

  static Ideal make(RingPtr r, std::vector<Poly> gens);
};

}  // namespace reflexa
