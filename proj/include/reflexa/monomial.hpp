#pragma once

#include <cstdint>
#include <vector>

#include "reflexa/errors.hpp"

namespace reflexa {

// A power product, stored as its exponent vector. The ambient variable count
// is the vector length; all monomials of a ring share it.
struct Monomial {
  std::vector<std::uint32_t> e;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }

  std::size_t nvars() const { return e.size(); }
  std::uint64_t degree() const;
  bool is_one() const;

  bool operator==(const Monomial&) const = default;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
// True when the monomial is a positive power of a single variable.
bool is_pure_power(const Monomial& m, std::size_t var);

enum class Ordering { LT, EQ, GT };

// A total, multiplicative well-order on monomials: lex or degrevlex over a
// variable precedence list (precedence[0] is the greatest variable).
class MonomialOrder {
 public:
  enum class Tag { lex, degrevlex };

  MonomialOrder() = default;
  MonomialOrder(Tag tag, std::vector<std::uint32_t> precedence)
      : tag_(tag), prec_(std::move(precedence)) {}

  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  Tag tag() const { return tag_; }
  const std::vector<std::uint32_t>& precedence() const { return prec_; }

  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::LT; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::GT; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  Tag tag_ = Tag::degrevlex;
  std::vector<std::uint32_t> prec_;
};

}  // namespace reflexa
