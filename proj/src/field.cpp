#include "reflexa/field.hpp"

namespace reflexa {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid; a is a nonzero residue mod the prime p.
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("GF(p) modulus must be prime, got " + std::to_string(p));
  return Field(p);
}

std::string Field::str() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Coeff Coeff::from_int(const Field& f, long n) {
  if (f.is_rationals()) return Coeff(f, mpq_class(n), 0);
  std::int64_t r = n % static_cast<std::int64_t>(f.modulus());
  if (r < 0) r += f.modulus();
  return Coeff(f, mpq_class(), static_cast<std::uint32_t>(r));
}

Coeff Coeff::from_digits(const Field& f, const std::string& digits) {
  mpz_class z(digits, 10);
  if (f.is_rationals()) return Coeff(f, mpq_class(z), 0);
  mpz_class r = z % f.modulus();
  return Coeff(f, mpq_class(), static_cast<std::uint32_t>(r.get_ui()));
}

Coeff Coeff::from_mpq(mpq_class q) {
  q.canonicalize();
  return Coeff(Field::rationals(), std::move(q), 0);
}

bool Coeff::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Coeff::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Coeff::check_same(const Coeff& o) const {
  if (!(field_ == o.field_))
    throw RingMismatchError("coefficient fields differ: " + field_.str() + " vs " + o.field_.str());
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same(o);
  if (field_.is_rationals()) return Coeff(field_, q_ + o.q_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
  return Coeff(field_, mpq_class(), static_cast<std::uint32_t>(s % field_.modulus()));
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same(o);
  if (field_.is_rationals()) return Coeff(field_, q_ - o.q_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(r_) + field_.modulus() - o.r_;
  return Coeff(field_, mpq_class(), static_cast<std::uint32_t>(s % field_.modulus()));
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same(o);
  if (field_.is_rationals()) return Coeff(field_, q_ * o.q_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(r_) * o.r_;
  return Coeff(field_, mpq_class(), static_cast<std::uint32_t>(s % field_.modulus()));
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
  if (field_.is_rationals()) return Coeff(field_, -q_, 0);
  return Coeff(field_, mpq_class(), r_ == 0 ? 0 : field_.modulus() - r_);
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw Error("division by zero coefficient");
  if (field_.is_rationals()) return Coeff(field_, 1 / q_, 0);
  return Coeff(field_, mpq_class(), mod_inverse(r_, field_.modulus()));
}

bool Coeff::operator==(const Coeff& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Coeff::str() const {
  if (field_.is_rationals()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace reflexa
