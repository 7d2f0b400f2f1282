#include "unigen/series.hpp"

#include <algorithm>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

namespace {
const Cyclotomic kZeroValue{};
}

TruncatedLaurentSeries TruncatedLaurentSeries::from_coeffs(long valuation,
                                                           std::vector<Cyclotomic> coeffs) {
  if (coeffs.empty()) throw DomainError("series window must contain at least one coefficient");
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first].is_zero()) ++first;
  if (first == coeffs.size()) {
    // All known coefficients vanish: canonical zero, window length preserved.
    return TruncatedLaurentSeries(0, std::move(coeffs), true);
  }
  if (first > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(first));
  return TruncatedLaurentSeries(valuation + static_cast<long>(first), std::move(coeffs), false);
}

TruncatedLaurentSeries TruncatedLaurentSeries::zero(long truncation_order) {
  if (truncation_order < 0) throw DomainError("truncation order must be non-negative");
  return TruncatedLaurentSeries(0, std::vector<Cyclotomic>(static_cast<std::size_t>(truncation_order) + 1),
                                true);
}

TruncatedLaurentSeries TruncatedLaurentSeries::constant(const Cyclotomic& c, long truncation_order) {
  if (truncation_order < 0) throw DomainError("truncation order must be non-negative");
  std::vector<Cyclotomic> w(static_cast<std::size_t>(truncation_order) + 1);
  w[0] = c;
  return from_coeffs(0, std::move(w));
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(const Cyclotomic& c, long power,
                                                        long truncation_order) {
  if (truncation_order < 0) throw DomainError("truncation order must be non-negative");
  std::vector<Cyclotomic> w(static_cast<std::size_t>(truncation_order) + 1);
  w[0] = c;
  auto s = from_coeffs(power, std::move(w));
  return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::exp_linear(const Cyclotomic& c, long truncation_order) {
  if (truncation_order < 0) throw DomainError("truncation order must be non-negative");
  std::vector<Cyclotomic> w(static_cast<std::size_t>(truncation_order) + 1);
  w[0] = Cyclotomic(Rational(1));
  for (long n = 1; n <= truncation_order; ++n)
    w[static_cast<std::size_t>(n)] =
        w[static_cast<std::size_t>(n - 1)] * c * Cyclotomic(Rational(mpz_class(1), mpz_class(n)));
  return from_coeffs(0, std::move(w));
}

const Cyclotomic& TruncatedLaurentSeries::coeff(long power) const {
  if (zero_) {
    if (power > known_through())
      throw InsufficientTruncationError("coefficient of t^" + std::to_string(power) +
                                        " lies beyond the zero series window t^" +
                                        std::to_string(known_through()));
    return kZeroValue;
  }
  if (power < valuation_) return kZeroValue;
  if (power > known_through())
    throw InsufficientTruncationError("coefficient of t^" + std::to_string(power) +
                                      " lies beyond the truncation window t^" +
                                      std::to_string(known_through()));
  return coeffs_[static_cast<std::size_t>(power - valuation_)];
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
  std::vector<Cyclotomic> w = coeffs_;
  for (auto& c : w) c = -c;
  return TruncatedLaurentSeries(valuation_, std::move(w), zero_);
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& f, const TruncatedLaurentSeries& g) {
  const long known = std::min(f.known_through(), g.known_through());
  if (f.is_zero() || g.is_zero()) {
    const TruncatedLaurentSeries& live = f.is_zero() ? g : f;
    if (live.is_zero() || live.valuation() > known) {
      const long window = std::max<long>(known, 0);
      return TruncatedLaurentSeries::zero(window);
    }
    std::vector<Cyclotomic> w(live.window().begin(),
                              live.window().begin() + (known - live.valuation() + 1));
    return TruncatedLaurentSeries::from_coeffs(live.valuation(), std::move(w));
  }
  const long v = std::min(f.valuation(), g.valuation());
  if (known < v) return TruncatedLaurentSeries::zero(std::max<long>(known, 0));
  std::vector<Cyclotomic> w(static_cast<std::size_t>(known - v) + 1);
  for (long p = v; p <= known; ++p)
    w[static_cast<std::size_t>(p - v)] = f.coeff(p) + g.coeff(p);
  return TruncatedLaurentSeries::from_coeffs(v, std::move(w));
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& f, const TruncatedLaurentSeries& g) {
  return f + (-g);
}

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& f, const TruncatedLaurentSeries& g) {
  const long window = std::min(f.truncation_order(), g.truncation_order());
  if (f.is_zero() || g.is_zero()) return TruncatedLaurentSeries::zero(window);
  std::vector<Cyclotomic> w(static_cast<std::size_t>(window) + 1);
  for (long r = 0; r <= window; ++r) {
    Cyclotomic acc;
    for (long i = 0; i <= r; ++i) {
      const Cyclotomic& a = f.window()[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      acc += a * g.window()[static_cast<std::size_t>(r - i)];
    }
    w[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return TruncatedLaurentSeries::from_coeffs(f.valuation() + g.valuation(), std::move(w));
}

TruncatedLaurentSeries TruncatedLaurentSeries::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return zero(truncation_order());
  std::vector<Cyclotomic> w = coeffs_;
  for (auto& x : w) x *= c;
  return TruncatedLaurentSeries(valuation_, std::move(w), zero_);
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(long powers) const {
  if (zero_) return *this;
  return TruncatedLaurentSeries(valuation_ + powers, coeffs_, false);
}

TruncatedLaurentSeries TruncatedLaurentSeries::div(const TruncatedLaurentSeries& num,
                                                   const TruncatedLaurentSeries& den) {
  if (den.is_zero())
    throw PoleError("series division by zero: denominator vanishes through t^" +
                    std::to_string(den.known_through()));
  const long window = std::min(num.truncation_order(), den.truncation_order());
  if (num.is_zero()) return zero(window);
  // Both tight: back-substitution against the unit part of den.
  const Cyclotomic lead_inv = den.window()[0].inverse();
  std::vector<Cyclotomic> q(static_cast<std::size_t>(window) + 1);
  for (long r = 0; r <= window; ++r) {
    Cyclotomic acc = num.window()[static_cast<std::size_t>(r)];
    for (long i = 0; i < r; ++i) {
      const Cyclotomic& qi = q[static_cast<std::size_t>(i)];
      if (qi.is_zero()) continue;
      acc -= qi * den.window()[static_cast<std::size_t>(r - i)];
    }
    q[static_cast<std::size_t>(r)] = acc * lead_inv;
  }
  return from_coeffs(num.valuation() - den.valuation(), std::move(q));
}

TruncatedLaurentSeries TruncatedLaurentSeries::pow(long h) const {
  if (h < 1) throw DomainError("series power requires h >= 1");
  TruncatedLaurentSeries acc = *this;
  for (long i = 1; i < h; ++i) acc = acc * *this;
  return acc;
}

std::string TruncatedLaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (long p = valuation_; p <= known_through(); ++p) {
    const Cyclotomic& c = coeff(p);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (p != 0) os << "*t^" << p;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << known_through() + 1 << ")";
  return os.str();
}

TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& f, const TruncatedLaurentSeries& g) {
  return f * g;
}

TruncatedLaurentSeries series_div(const TruncatedLaurentSeries& num, const TruncatedLaurentSeries& den) {
  return TruncatedLaurentSeries::div(num, den);
}

TruncatedLaurentSeries series_pow(const TruncatedLaurentSeries& f, long h) { return f.pow(h); }

Cyclotomic extract_y(const TruncatedLaurentSeries& f, long n) {
  if (n < 0) throw DomainError("coefficient index must be non-negative");
  if (!f.is_zero() && f.valuation() < 0)
    throw PoleError("series has a pole of order " + std::to_string(-f.valuation()) +
                    " at t = 0; coefficients y_n are undefined");
  return f.coeff(n) * Cyclotomic(Rational(factorial(static_cast<unsigned long>(n))));
}

}  // namespace unigen
