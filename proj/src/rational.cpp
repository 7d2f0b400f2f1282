#include "unigen/rational.hpp"

#include <cmath>
#include <ostream>

#include "unigen/errors.hpp"

namespace unigen {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw PoleError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t i = 0;
  auto scan_int = [&](const char* what) -> mpz_class {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(text.substr(start, i - start));
  };
  mpz_class num = scan_int("integer");
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int("denominator");
    if (sgn(den) <= 0) throw ParseError("denominator must be a positive integer", i);
  }
  if (i < text.size()) {
    if (text[i] == '.')
      throw ParseError("decimal literals are not exact; use an integer or p/q rational", i);
    throw ParseError("trailing characters after rational", i);
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw PoleError("zero raised to a negative power");
    return Rational(0);
  }
  const Rational base = e < 0 ? inverse() : *this;
  const unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                                : static_cast<unsigned long>(e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.numerator().get_mpz_t(), n);
  mpz_pow_ui(pd.get_mpz_t(), base.denominator().get_mpz_t(), n);
  return Rational(pn, pd);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const { return v_.get_str(); }

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  signed long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
  return ldexpl(static_cast<long double>(mn) / static_cast<long double>(md),
                static_cast<int>(en - ed));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long PadicValuation::value() const {
  if (infinite_) throw DomainError("infinite p-adic valuation has no integer value");
  return v_;
}

std::string PadicValuation::str() const { return infinite_ ? "inf" : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const PadicValuation& v) { return os << v.str(); }

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

PadicValuation vp(const Rational& x, unsigned long p) {
  if (!is_prime(p)) throw DomainError("vp requires a prime p, got " + std::to_string(p));
  if (x.is_zero()) return PadicValuation::infinity();
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class stripped;
  const long vnum = static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), x.numerator().get_mpz_t(), pz.get_mpz_t()));
  const long vden = static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), x.denominator().get_mpz_t(), pz.get_mpz_t()));
  return PadicValuation::finite(vnum - vden);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace unigen
