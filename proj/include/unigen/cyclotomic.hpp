#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unigen/rational.hpp"

namespace unigen {

// Element of the cyclotomic field Q(zeta_m), stored as a coefficient vector of
// length deg(Phi_m) = phi(m) on the power basis 1, zeta, ..., zeta^(phi(m)-1),
// always reduced modulo the m-th cyclotomic polynomial Phi_m. Reduction mod
// Phi_m (rather than x^m - 1) makes the representation canonical at a fixed
// order: equality at order m is coefficient comparison, and cross-order
// equality promotes both operands to the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}                       // zero
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}               // NOLINT
  Cyclotomic(const Rational& q) : order_(1), coeffs_{q} {}      // NOLINT

  // zeta_m^e, reduced to its minimal order (e.g. (4,2) stores as -1 at order 2).
  static Cyclotomic root_of_unity(unsigned long m, long e);

  // Coefficients on the basis of Q(zeta_m); any length is accepted and reduced.
  static Cyclotomic from_coeffs(unsigned long m, std::vector<Rational> raw);

  unsigned long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws DomainError when the value has nonzero non-constant coordinates.
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Exact multiplicative inverse; PoleError on zero.
  Cyclotomic inverse() const;
  // e may be negative; 0^0 = 1 by convention.
  Cyclotomic pow(long e) const;
  // Complex conjugation (zeta -> zeta^-1); a field automorphism, so exact.
  Cyclotomic conj() const;

  // Same value viewed in Q(zeta_M); M must be a multiple of order().
  Cyclotomic promoted_to(unsigned long target_order) const;
  // Inverse of promotion when the value lies in the subfield Q(zeta_m);
  // nullopt when it does not.
  std::optional<Cyclotomic> restricted_to(unsigned long target_order) const;

  // Numeric embedding zeta_m -> exp(2*pi*i/m). precision_digits is validated
  // against the long double carrier (capped at 15 significant decimal digits);
  // requests beyond the cap raise DomainError rather than silently degrading.
  std::pair<double, double> complex_embed(int precision_digits = 15) const;

  // Compact form like "2-1/3*z6^2"; "0" for zero.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

 private:
  Cyclotomic(unsigned long m, std::vector<Rational> reduced_coeffs)
      : order_(m), coeffs_(std::move(reduced_coeffs)) {}

  unsigned long order_;
  std::vector<Rational> coeffs_;
};

// Unit root zeta_m^e stored gcd-normalized, so (order, exponent) is the unique
// pair with minimal order: (6,2) normalizes to (3,1), (anything,0) to (1,0).
class RootOfUnity {
 public:
  RootOfUnity() : order_(1), exponent_(0) {}
  RootOfUnity(unsigned long m, long e);

  unsigned long order() const { return order_; }
  unsigned long exponent() const { return exponent_; }
  bool is_one() const { return order_ == 1; }

  Cyclotomic value() const { return Cyclotomic::root_of_unity(order_, static_cast<long>(exponent_)); }
  RootOfUnity pow(long e) const;
  RootOfUnity inverse() const { return pow(-1); }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.order_ == b.order_ && a.exponent_ == b.exponent_;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

  // "m:e" surface form used by the CLI.
  std::string str() const;
  static RootOfUnity parse(const std::string& text);

 private:
  unsigned long order_;
  unsigned long exponent_;
};

inline Cyclotomic make_root_of_unity(unsigned long m, long e) {
  return RootOfUnity(m, e).value();
}

inline Cyclotomic cyclo_invert(const Cyclotomic& z) { return z.inverse(); }

unsigned long euler_phi(unsigned long m);

// Coefficients of Phi_m, monic, degree phi(m); index = power. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long m);

}  // namespace unigen
