#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "reflexa/errors.hpp"

namespace reflexa {

// Coefficient field descriptor: the rationals or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }

  bool operator==(const Field&) const = default;

  std::string str() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;  // 0 encodes the rationals
};

// An exact field element. Rationals are GMP-backed and kept canonical
// (lowest terms, positive denominator); GF(p) values are reduced residues.
class Coeff {
 public:
  Coeff() : field_(Field::rationals()) {}

  static Coeff zero(const Field& f) { return from_int(f, 0); }
  static Coeff one(const Field& f) { return from_int(f, 1); }
  static Coeff from_int(const Field& f, long n);
  // Parses a decimal integer of arbitrary size.
  static Coeff from_digits(const Field& f, const std::string& digits);
  static Coeff from_mpq(mpq_class q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // Numerator/denominator access for printing; GF(p) has denominator 1.
  std::string str() const;
  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

 private:
  Coeff(const Field& f, mpq_class q, std::uint32_t r)
      : field_(f), q_(std::move(q)), r_(r) {}
  void check_same(const Coeff& o) const;

  Field field_;
  mpq_class q_;          // used when field is QQ
  std::uint32_t r_ = 0;  // used when field is GF(p)
};

}  // namespace reflexa
