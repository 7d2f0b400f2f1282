#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace unigen {

// Exact rational number. Canonical form: gcd(|numerator|, denominator) = 1,
// denominator >= 1, zero stored as 0/1. Immutable in spirit: every operation
// returns a fresh value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p" or "p/q" with optional leading minus. Rejects anything else,
  // including decimal literals, with a ParseError.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  // e may be negative; 0^0 = 1 by convention, 0^negative raises PoleError.
  Rational pow(long e) const;
  Rational abs() const;

  // Canonical decimal-free string: "p" or "p/q".
  std::string str() const;

  // Mantissa/exponent conversion so values far outside double range still
  // produce a finite quotient when numerator and denominator balance.
  long double to_long_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// p-adic valuation result: either a finite integer or the +infinity sentinel
// reserved for the valuation of zero. Infinity compares greater than every
// finite value.
class PadicValuation {
 public:
  static PadicValuation infinity() { return PadicValuation(true, 0); }
  static PadicValuation finite(long v) { return PadicValuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;

  friend bool operator==(const PadicValuation& a, const PadicValuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const PadicValuation& a, const PadicValuation& b) { return !(a == b); }
  friend bool operator<(const PadicValuation& a, const PadicValuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const PadicValuation& a, const PadicValuation& b) { return a < b || a == b; }
  friend bool operator>(const PadicValuation& a, const PadicValuation& b) { return b < a; }
  friend bool operator>=(const PadicValuation& a, const PadicValuation& b) { return b <= a; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PadicValuation& v);

 private:
  PadicValuation(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

// Exponent of p in x, so |x|_p = p^(-vp(x)); vp(0) is the infinity sentinel.
// p must be a prime >= 2.
PadicValuation vp(const Rational& x, unsigned long p);

// Exact binomial coefficient / factorial helpers (cached under the hood by GMP).
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);
bool is_prime(unsigned long p);

}  // namespace unigen
