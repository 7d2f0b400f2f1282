#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unigen/unified.hpp"

namespace unigen {

// Twisted parameters: the unified tuple plus a root of unity w and the
// multiplicity h of the kernel power. Regularity now means
// w*(beta/a)^b != 1; the cached ratio drives pole and operator checks.
class TwistedParams {
 public:
  TwistedParams(UnifiedParams base, RootOfUnity w, long h);

  const UnifiedParams& base() const { return base_; }
  const RootOfUnity& w() const { return w_; }
  long h() const { return h_; }
  // w * (beta/a)^b
  const Cyclotomic& ratio() const { return ratio_; }
  bool regular() const { return regular_; }

  std::string str() const;

 private:
  UnifiedParams base_;
  RootOfUnity w_;
  long h_;
  Cyclotomic ratio_;
  bool regular_;
};

// Kernel (2 (t/2)^k / (w beta^b e^t - a^b))^h, optionally times e^{xt}.
TruncatedLaurentSeries multiple_twisted_series(const TwistedParams& tp, const Rational& x,
                                               long trunc);

// y_{n,w,beta}(k,a,b) for n = 0..n_max (the h = 1 twisted family).
std::vector<Cyclotomic> twisted_numbers(const TwistedParams& tp, long n_max,
                                        std::optional<long> trunc = std::nullopt);

// y^{(h)}_{n,w,beta}(x:k,a,b) values for n = 0..n_max.
std::vector<Cyclotomic> multiple_twisted_polys(const TwistedParams& tp, const Rational& x,
                                               long n_max,
                                               std::optional<long> trunc = std::nullopt);

// Scaled moments A_n = y^{(h)}_{n+kh}(x) * n!/(n+kh)! extracted from the
// h-power series; the object both convolution theorems constrain.
std::vector<Cyclotomic> multiple_scaled_moments(const TwistedParams& tp, const Rational& x,
                                                long n_max,
                                                std::optional<long> trunc = std::nullopt);

// Proof-consistent form of the h-fold convolution: the h-power moment at n
// equals the multinomial convolution of h = 1 scaled moments
// m_l = y_{l+k,w,beta}(k,a,b)/(k! C(l+k,k)). The theorem's literal printed
// form (with y^{(h)} factors normalized by (kh)!) is also evaluated and its
// agreement recorded in the report.
VerificationReport verify_multinomial_convolution(const TwistedParams& tp, long n_max);

// Same with x carried by the last factor of the product.
VerificationReport verify_sum_of_powers(const TwistedParams& tp, const Rational& x, long n_max);

// Enumerates compositions l_1+...+l_h = n, calling visit(multinomial, parts).
void for_each_composition(long n, long h,
                          const std::function<void(const Rational&, const std::vector<long>&)>& visit);

}  // namespace unigen
