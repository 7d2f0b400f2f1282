#include "unigen/valueexpr.hpp"

#include <cctype>

#include "unigen/errors.hpp"

namespace unigen {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' in " + what, pos);
  }
};

long scan_long(Cursor& cur, const char* what) {
  const std::size_t start = cur.pos;
  if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
  std::size_t digits_from = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (cur.pos == digits_from) throw ParseError(std::string("expected integer ") + what, start);
  try {
    return std::stol(cur.text.substr(start, cur.pos - start));
  } catch (const std::out_of_range&) {
    throw ParseError(std::string("integer out of range in ") + what, start);
  }
}

Rational scan_rational(Cursor& cur) {
  const std::size_t start = cur.pos;
  if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
  std::size_t digits_from = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (cur.pos == digits_from) throw ParseError("expected rational literal", start);
  if (cur.peek() == '.')
    throw ParseError(
        "decimal literals are not exact; only rationals and roots of unity are representable "
        "in the cyclotomic-rational field",
        cur.pos);
  mpz_class num(cur.text.substr(start, cur.pos - start));
  mpz_class den = 1;
  if (cur.consume('/')) {
    const std::size_t dstart = cur.pos;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == dstart) throw ParseError("expected positive denominator", dstart);
    if (cur.peek() == '.')
      throw ParseError("decimal literals are not exact; use an integer denominator", cur.pos);
    den = mpz_class(cur.text.substr(dstart, cur.pos - dstart));
    if (den == 0) throw ParseError("denominator must be nonzero", dstart);
  }
  return Rational(num, den);
}

RootOfUnity scan_root(Cursor& cur) {
  // at "zeta("
  cur.pos += 4;
  cur.expect('(', "zeta(m,e)");
  const long m = scan_long(cur, "order m");
  if (m < 1) throw ParseError("root order m must be positive", cur.pos);
  cur.expect(',', "zeta(m,e)");
  const long e = scan_long(cur, "exponent e");
  cur.expect(')', "zeta(m,e)");
  return RootOfUnity(static_cast<unsigned long>(m), e);
}

bool at_root(const Cursor& cur) { return cur.text.compare(cur.pos, 4, "zeta") == 0; }

}  // namespace

std::string ValueExpr::str() const {
  if (root.is_one()) return rational_part.str();
  const std::string z = "zeta(" + std::to_string(root.order()) + "," +
                        std::to_string(root.exponent()) + ")";
  if (rational_part.is_one()) return z;
  return rational_part.str() + "*" + z;
}

ValueExpr parse_value_expr(const std::string& text) {
  Cursor cur{text};
  ValueExpr out;
  if (at_root(cur)) {
    out.rational_part = Rational(1);
    out.root = scan_root(cur);
  } else {
    out.rational_part = scan_rational(cur);
    if (cur.consume('*')) {
      if (!at_root(cur)) throw ParseError("expected zeta(m,e) after '*'", cur.pos);
      out.root = scan_root(cur);
    }
  }
  if (!cur.done()) {
    if (cur.peek() == '.')
      throw ParseError(
          "decimal literals are not exact; only rationals and roots of unity are representable "
          "in the cyclotomic-rational field",
          cur.pos);
    throw ParseError("trailing characters after value expression", cur.pos);
  }
  return out;
}

}  // namespace unigen
