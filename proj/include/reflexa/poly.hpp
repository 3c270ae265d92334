#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "reflexa/field.hpp"
#include "reflexa/monomial.hpp"

namespace reflexa {

// Shared ambient context of a polynomial: coefficient field, variable names
// and the term order. Quotient structure lives in Ring, not here.
struct RingDesc {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  bool operator==(const RingDesc&) const = default;
};

using DescPtr = std::shared_ptr<const RingDesc>;

DescPtr make_desc(Field f, std::vector<std::string> vars, MonomialOrder order);
DescPtr make_desc(Field f, std::vector<std::string> vars);  // degrevlex default

struct Term {
  Monomial m;
  Coeff c;
  bool operator==(const Term&) const = default;
};

// Exact multivariate polynomial in canonical form: terms strictly descending
// in the ambient order, no zero coefficients. Equal polynomials have
// identical representations.
class Poly {
 public:
  Poly() = default;
  explicit Poly(DescPtr ctx) : ctx_(std::move(ctx)) {}

  static Poly zero(DescPtr ctx) { return Poly(std::move(ctx)); }
  static Poly constant(DescPtr ctx, Coeff c);
  static Poly constant(DescPtr ctx, long n);
  static Poly variable(DescPtr ctx, std::size_t v, std::uint32_t exp = 1);
  static Poly term(DescPtr ctx, Monomial m, Coeff c);
  // Normalizes: sorts, merges equal monomials, drops zeros.
  static Poly from_terms(DescPtr ctx, std::vector<Term> terms);

  const DescPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  const Monomial& lm() const;
  const Coeff& lc() const;
  const Term& lt() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Coeff& c) const;
  Poly times_term(const Monomial& m, const Coeff& c) const;
  Poly monic() const;  // scaled so the leading coefficient is 1

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;  // canonical text; parse(str()) round-trips

 private:
  void check_compatible(const Poly& o) const;

  DescPtr ctx_;
  std::vector<Term> t_;
};

// Full normal form of p under division by the given polynomials: no term of
// the result is divisible by any nonzero divisor's leading monomial.
Poly reduce_full(const Poly& p, std::span<const Poly> divisors);

}  // namespace reflexa
