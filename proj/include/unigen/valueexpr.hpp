#pragma once

#include <string>

#include "unigen/cyclotomic.hpp"

namespace unigen {

// Surface syntax for exact field elements: q, q*zeta(m,e), or zeta(m,e),
// denoting the rational q times the root of unity zeta_m^e. Decimals are
// rejected outright; only members of the exact cyclotomic-rational subfield
// are representable.
struct ValueExpr {
  Rational rational_part{1};
  RootOfUnity root;  // identity when absent

  Cyclotomic value() const { return Cyclotomic(rational_part) * root.value(); }
  bool has_root() const { return !root.is_one(); }

  // Canonical print: parse(str()) == *this on canonical strings.
  std::string str() const;
};

// Grammar: RATIONAL | RATIONAL "*" ROOT | ROOT, where ROOT := "zeta(" INT "," INT ")"
// and RATIONAL := INT | INT "/" POSINT. ParseError carries the offending position.
ValueExpr parse_value_expr(const std::string& text);

}  // namespace unigen
