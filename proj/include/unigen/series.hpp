#pragma once

#include <string>
#include <vector>

#include "unigen/cyclotomic.hpp"

namespace unigen {

// Truncated Laurent series over the cyclotomic field: a window of known
// coefficients c_0..c_T for t^(v), ..., t^(v+T). The stored form is tight:
// either c_0 != 0 (the valuation is exact and nothing exists below it) or the
// series is the canonical zero (v = 0, all-zero window). A window of length
// T+1 means "every coefficient of t^n for n <= v+T is known"; coefficients
// above the window are unknown, coefficients below v are exactly zero.
class TruncatedLaurentSeries {
 public:
  // Canonical zero known through t^T.
  static TruncatedLaurentSeries zero(long truncation_order);
  static TruncatedLaurentSeries constant(const Cyclotomic& c, long truncation_order);
  // c * t^power with window T above the monomial.
  static TruncatedLaurentSeries monomial(const Cyclotomic& c, long power, long truncation_order);
  // exp(c*t) through t^T: sum of c^n/n! * t^n.
  static TruncatedLaurentSeries exp_linear(const Cyclotomic& c, long truncation_order);
  // General window starting at t^valuation; the constructor tightens.
  static TruncatedLaurentSeries from_coeffs(long valuation, std::vector<Cyclotomic> coeffs);

  long valuation() const { return valuation_; }
  // Relative window length minus one: index of the last known coefficient
  // counted from the valuation.
  long truncation_order() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Highest absolute power of t whose coefficient is known.
  long known_through() const { return valuation_ + truncation_order(); }
  bool is_zero() const { return zero_; }
  const std::vector<Cyclotomic>& window() const { return coeffs_; }

  // Coefficient of t^power; exact zero below the valuation, throws
  // InsufficientTruncationError above the window.
  const Cyclotomic& coeff(long power) const;

  TruncatedLaurentSeries operator-() const;
  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& f,
                                          const TruncatedLaurentSeries& g);
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& f,
                                          const TruncatedLaurentSeries& g);
  // Cauchy product; valuations add, window = min of the operand windows.
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& f,
                                          const TruncatedLaurentSeries& g);

  TruncatedLaurentSeries scaled(const Cyclotomic& c) const;
  TruncatedLaurentSeries shifted(long powers) const;  // multiply by t^powers

  // Exact quotient: result * den == num through the common window.
  // PoleError when den vanishes through its whole window.
  static TruncatedLaurentSeries div(const TruncatedLaurentSeries& num,
                                    const TruncatedLaurentSeries& den);
  // Repeated multiplication, h >= 1.
  TruncatedLaurentSeries pow(long h) const;

  std::string str() const;

 private:
  TruncatedLaurentSeries(long valuation, std::vector<Cyclotomic> coeffs, bool zero)
      : valuation_(valuation), coeffs_(std::move(coeffs)), zero_(zero) {}

  long valuation_;
  std::vector<Cyclotomic> coeffs_;
  bool zero_;
};

TruncatedLaurentSeries series_mul(const TruncatedLaurentSeries& f, const TruncatedLaurentSeries& g);
TruncatedLaurentSeries series_div(const TruncatedLaurentSeries& num, const TruncatedLaurentSeries& den);
TruncatedLaurentSeries series_pow(const TruncatedLaurentSeries& f, long h);

// n! * [t^n] f. PoleError when val(f) < 0 (f is not a power series);
// InsufficientTruncationError when n lies beyond the known window.
Cyclotomic extract_y(const TruncatedLaurentSeries& f, long n);

}  // namespace unigen
