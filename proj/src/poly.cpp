#include "reflexa/poly.hpp"

#include <algorithm>
#include <sstream>

namespace reflexa {

DescPtr make_desc(Field f, std::vector<std::string> vars, MonomialOrder order) {
  if (order.precedence().size() != vars.size())
    throw DimensionError("order precedence list does not match variable count");
  return std::make_shared<const RingDesc>(RingDesc{std::move(f), std::move(vars), std::move(order)});
}

DescPtr make_desc(Field f, std::vector<std::string> vars) {
  auto ord = MonomialOrder::degrevlex(vars.size());
  return make_desc(std::move(f), std::move(vars), std::move(ord));
}

Poly Poly::constant(DescPtr ctx, Coeff c) {
  Poly p(ctx);
  if (!c.is_zero()) p.t_.push_back(Term{Monomial::one(ctx->nvars()), std::move(c)});
  return p;
}

Poly Poly::constant(DescPtr ctx, long n) {
  Coeff c = Coeff::from_int(ctx->field, n);
  return constant(std::move(ctx), std::move(c));
}

Poly Poly::variable(DescPtr ctx, std::size_t v, std::uint32_t exp) {
  if (v >= ctx->nvars()) throw DimensionError("variable index out of range");
  Monomial m = Monomial::one(ctx->nvars());
  m.e[v] = exp;
  Coeff c = Coeff::one(ctx->field);
  if (exp == 0) return constant(std::move(ctx), std::move(c));
  Poly p(ctx);
  p.t_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Poly Poly::term(DescPtr ctx, Monomial m, Coeff c) {
  Poly p(ctx);
  if (m.nvars() != ctx->nvars()) throw DimensionError("monomial length does not match ring");
  if (!c.is_zero()) p.t_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(DescPtr ctx, std::vector<Term> terms) {
  const auto& ord = ctx->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  Poly p(ctx);
  for (auto& t : terms) {
    if (t.m.nvars() != ctx->nvars()) throw DimensionError("monomial length does not match ring");
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c = p.t_.back().c + t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

const Monomial& Poly::lm() const {
  if (is_zero()) throw Error("leading monomial of the zero polynomial");
  return t_.front().m;
}

const Coeff& Poly::lc() const {
  if (is_zero()) throw Error("leading coefficient of the zero polynomial");
  return t_.front().c;
}

const Term& Poly::lt() const {
  if (is_zero()) throw Error("leading term of the zero polynomial");
  return t_.front();
}

void Poly::check_compatible(const Poly& o) const {
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_) throw RingMismatchError("operation on a polynomial without a ring");
  if (!(*ctx_ == *o.ctx_)) throw RingMismatchError("polynomials belong to different rings");
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r(ctx_);
  r.t_.reserve(t_.size() + o.t_.size());
  const auto& ord = ctx_->order;
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    Ordering c = ord.compare(t_[i].m, o.t_[j].m);
    if (c == Ordering::GT) {
      r.t_.push_back(t_[i++]);
    } else if (c == Ordering::LT) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Coeff s = t_[i].c + o.t_[j].c;
      if (!s.is_zero()) r.t_.push_back(Term{t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back(Term{t.m, -t.c});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  if (c.is_zero()) return Poly(ctx_);
  Poly r(ctx_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Coeff prod = t.c * c;
    if (!prod.is_zero()) r.t_.push_back(Term{mul(t.m, m), std::move(prod)});
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly acc(ctx_);
  // Multiply by the shorter operand term-by-term; addition keeps order.
  const Poly& a = t_.size() <= o.t_.size() ? *this : o;
  const Poly& b = t_.size() <= o.t_.size() ? o : *this;
  for (const auto& t : a.t_) acc = acc + b.times_term(t.m, t.c);
  return acc;
}

Poly Poly::scaled(const Coeff& c) const {
  return times_term(Monomial::one(ctx_->nvars()), c);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

bool Poly::operator==(const Poly& o) const {
  if (ctx_ != o.ctx_) {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) return false;
  }
  return t_ == o.t_;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    bool coeff_is_one = (cs == "1");
    bool printed = false;
    if (!coeff_is_one || t.m.is_one()) {
      out << cs;
      printed = true;
    }
    for (std::size_t v = 0; v < t.m.e.size(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (printed) out << "*";
      out << ctx_->vars[v];
      if (t.m.e[v] > 1) out << "^" << t.m.e[v];
      printed = true;
    }
  }
  return out.str();
}

Poly reduce_full(const Poly& p, std::span<const Poly> divisors) {
  if (p.is_zero()) return p;
  const auto& ctx = p.ctx();
  Poly work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lead = work.lt();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (divides(g.lm(), lead.m)) {
        Coeff f = lead.c / g.lc();
        work = work - g.times_term(quotient(lead.m, g.lm()), f);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lead);
      Poly rest(ctx);
      std::vector<Term> tail(work.terms().begin() + 1, work.terms().end());
      work = Poly::from_terms(ctx, std::move(tail));
    }
  }
  return Poly::from_terms(ctx, std::move(remainder));
}

}  // namespace reflexa
