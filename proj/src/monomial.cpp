#include "reflexa/monomial.hpp"

#include <numeric>

namespace reflexa {

namespace {

void check_lengths(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("monomial exponent vectors have different lengths: " +
                         std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
}

}  // namespace

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  check_lengths(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_lengths(a, b);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  check_lengths(a, b);
  Monomial r = b;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] > b.e[i]) throw Error("monomial quotient is not a monomial");
    r.e[i] -= a.e[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_lengths(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < b.e.size(); ++i)
    if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_lengths(a, b);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

bool is_pure_power(const Monomial& m, std::size_t var) {
  if (m.e[var] == 0) return false;
  for (std::size_t i = 0; i < m.e.size(); ++i)
    if (i != var && m.e[i] != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::uint32_t> prec(nvars);
  std::iota(prec.begin(), prec.end(), 0u);
  return MonomialOrder(Tag::degrevlex, std::move(prec));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::uint32_t> prec(nvars);
  std::iota(prec.begin(), prec.end(), 0u);
  return MonomialOrder(Tag::lex, std::move(prec));
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  check_lengths(a, b);
  if (a.nvars() != prec_.size())
    throw DimensionError("monomial length does not match order precedence list");
  if (tag_ == Tag::lex) {
    for (auto v : prec_) {
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
  }
  // degrevlex: by total degree, ties broken by the last differing variable in
  // precedence order, smaller exponent there being greater.
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? Ordering::GT : Ordering::LT;
  for (std::size_t i = prec_.size(); i-- > 0;) {
    auto v = prec_[i];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

}  // namespace reflexa
