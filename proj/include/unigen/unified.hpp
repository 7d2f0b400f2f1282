#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unigen/cyclotomic.hpp"
#include "unigen/series.hpp"
#include "unigen/verify.hpp"

namespace unigen {

// Parameter tuple (k, a, b, beta) of the unified Bernoulli/Euler/Genocchi
// family. Exactness restrictions: a a positive rational, b a positive
// integer, beta a nonzero cyclotomic. The ratio (beta/a)^b is cached at
// construction; the tuple is regular when that ratio differs from 1, which is
// exactly when the generating kernel has no pole at t = 0 for k = 0.
class UnifiedParams {
 public:
  UnifiedParams(long k, Rational a, long b, Cyclotomic beta);

  long k() const { return k_; }
  const Rational& a() const { return a_; }
  long b() const { return b_; }
  const Cyclotomic& beta() const { return beta_; }
  // (beta/a)^b
  const Cyclotomic& ratio_pow_b() const { return ratio_pow_b_; }
  bool regular() const { return regular_; }

  std::string str() const;

 private:
  long k_;
  Rational a_;
  long b_;
  Cyclotomic beta_;
  Cyclotomic ratio_pow_b_;
  bool regular_;
};

// Polynomial in x over the cyclotomic field; trailing zero coefficients are
// trimmed so degree() is meaningful.
class PolyInX {
 public:
  PolyInX() = default;
  explicit PolyInX(std::vector<Cyclotomic> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
  const Cyclotomic& coeff(long i) const;
  bool is_zero() const { return coeffs_.empty(); }

  Cyclotomic evaluate(const Rational& x) const;
  Cyclotomic evaluate(const Cyclotomic& x) const;

  std::string str() const;

 private:
  std::vector<Cyclotomic> coeffs_;
};

// Dirichlet character mod d given as an explicit table of root-of-unity
// exponents. values[j] is the exponent e with chi(j) = zeta_m^e for units j,
// and nullopt (chi = 0) for non-units. Construction validates chi(1) = 1 and
// multiplicativity on every pair of units.
class DirichletCharacter {
 public:
  DirichletCharacter(unsigned long modulus, unsigned long root_order,
                     std::vector<std::optional<unsigned long>> values);

  static DirichletCharacter principal(unsigned long modulus);

  unsigned long modulus() const { return modulus_; }
  unsigned long root_order() const { return root_order_; }
  // chi(j) for any integer j (reduced mod d).
  Cyclotomic operator()(long j) const;
  bool is_zero_at(long j) const;

  std::string str() const;

 private:
  unsigned long modulus_;
  unsigned long root_order_;
  std::vector<std::optional<unsigned long>> values_;
};

// --- generating series ----------------------------------------------------

// 2 (t/2)^k / (w beta^b e^t - a^b) through t^T; PoleError when the quotient
// has a genuine pole at t = 0 (k = 0 with w beta^b = a^b).
TruncatedLaurentSeries unified_kernel(const UnifiedParams& p, const Cyclotomic& twist, long trunc);

// Default truncation: window comfortably past the largest index consumed.
long default_truncation(long n_max, long k, long h);

// --- families ---------------------------------------------------------------

// y_n(k,a,b) for n = 0..n_max via coefficient extraction.
std::vector<Cyclotomic> unified_numbers(const UnifiedParams& p, long n_max,
                                        std::optional<long> trunc = std::nullopt);

// y_n(x) as polynomials in x, built from the numbers by binomial convolution.
std::vector<PolyInX> unified_polynomials(const UnifiedParams& p, long n_max,
                                         std::optional<long> trunc = std::nullopt);

// y_n(x) values at a fixed x through the e^{xt} series route; independent of
// the convolution route above, which is what makes dual-path checks honest.
std::vector<Cyclotomic> unified_poly_values_series(const UnifiedParams& p, const Rational& x,
                                                   long n_max,
                                                   std::optional<long> trunc = std::nullopt);

// Character family: coefficients of
//   2 (t/2)^k  sum_{j mod d} chi(j) (beta/a)^{bj} e^{jt} / (beta^{bd} e^{dt} - a^{bd}),
// the x-dependent values multiply that series by e^{xt}.
std::vector<Cyclotomic> char_numbers(const DirichletCharacter& chi, const UnifiedParams& p,
                                     long n_max, std::optional<long> trunc = std::nullopt);
std::vector<Cyclotomic> char_poly_values(const DirichletCharacter& chi, const UnifiedParams& p,
                                         const Rational& x, long n_max,
                                         std::optional<long> trunc = std::nullopt);

// --- identity checks --------------------------------------------------------

// y_{n,beta^-1}(1-x : k, a^-1, b) == (-1)^{k+n+1} beta^b a^b y_{n,beta}(x:k,a,b)
VerificationReport verify_symmetry(const UnifiedParams& p, const Rational& x, long n_max);

// y_n(x) == a^{b(d-1)} d^{n-k} sum_j (beta/a)^{bj} y_{n,beta^d}((x+j)/d : k, a^d, b)
VerificationReport verify_distribution(const UnifiedParams& p, unsigned long d, const Rational& x,
                                       long n_max);

// y_{n+k}(x)/C(n+k,k) == sum_m C(n,m)/C(m+k,k) y_{m+k} x^{n-m}; requires
// regular parameters (the degenerate case has mismatched x-degrees).
VerificationReport verify_binomial_convolution(const UnifiedParams& p, const Rational& x,
                                               long n_max);

// y_{n,chi}(x) == d^{n-k} sum_j chi(j) (beta/a)^{bj} y_{n,beta^d}((x+j)/d : k, a^d, b)
VerificationReport verify_char_distribution(const DirichletCharacter& chi, const UnifiedParams& p,
                                            const Rational& x, long n_max);

}  // namespace unigen
