#include "reflexa/poly_io.hpp"

#include <cctype>

namespace reflexa {

namespace {

struct PolyParser {
  const DescPtr& ctx;
  const std::string& s;
  std::size_t pos = 0;

  PolyParser(const DescPtr& c, const std::string& text) : ctx(c), s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  bool at_number() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  bool at_ident() {
    skip_ws();
    return pos < s.size() &&
           (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return s.substr(start, pos - start);
  }

  std::string read_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return s.substr(start, pos - start);
  }

  std::uint32_t read_exponent() {
    std::string d = read_digits();
    if (d.size() > 6) fail("exponent too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  // number := digits [ '/' digits ]
  Poly parse_number() {
    std::string num = read_digits();
    if (eat('/')) {
      std::string den = read_digits();
      if (ctx->field.is_rationals()) {
        mpq_class q(mpz_class(num, 10), mpz_class(den, 10));
        q.canonicalize();
        return Poly::constant(ctx, Coeff::from_mpq(std::move(q)));
      }
      Coeff n = Coeff::from_digits(ctx->field, num);
      Coeff d = Coeff::from_digits(ctx->field, den);
      if (d.is_zero()) fail("zero denominator");
      return Poly::constant(ctx, n / d);
    }
    return Poly::constant(ctx, Coeff::from_digits(ctx->field, num));
  }

  Poly parse_factor() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of polynomial");
    Poly base(ctx);
    bool want_power = false;
    if (eat('(')) {
      base = parse_expr();
      if (!eat(')')) fail("expected ')'");
      want_power = true;
    } else if (at_number()) {
      return parse_number();  // rational literal already consumed its '/'
    } else if (at_ident()) {
      std::string name = read_ident();
      std::size_t v = 0;
      for (; v < ctx->vars.size(); ++v)
        if (ctx->vars[v] == name) break;
      if (v == ctx->vars.size()) fail("unknown variable '" + name + "'");
      base = Poly::variable(ctx, v);
      want_power = true;
    } else {
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
    if (want_power && eat('^')) {
      std::uint32_t e = read_exponent();
      Poly acc = Poly::constant(ctx, 1);
      for (std::uint32_t i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (at_factor_start()) {
        acc = acc * parse_factor();  // juxtaposition, e.g. 3X^2Y
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly run() {
    Poly p = parse_expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input after polynomial");
    return p;
  }
};

}  // namespace

Poly parse_poly(const DescPtr& ctx, const std::string& text) {
  return PolyParser(ctx, text).run();
}

}  // namespace reflexa
