// Independent oracles used by the test suites. Everything here is derived
// from classical recurrences or literal enumeration, never from the library
// paths under test.
#pragma once

#include <complex>
#include <vector>

#include "unigen/rational.hpp"

namespace oracles {

using unigen::Rational;

// B_0..B_n from sum_{j<m} C(m,j) B_j = 0 (m >= 2).
inline std::vector<Rational> bernoulli(long n_max) {
  std::vector<Rational> b{Rational(1)};
  for (long m = 2; m <= n_max + 1; ++m) {
    Rational acc(0);
    for (long j = 0; j <= m - 2; ++j)
      acc += Rational(unigen::binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j))) *
             b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(unigen::binomial(static_cast<unsigned long>(m),
                                                 static_cast<unsigned long>(m - 1))));
  }
  return b;
}

// G_0..G_n from (e^t + 1) sum G_n t^n/n! = 2t:
// 2 G_n + sum_{j<n} C(n,j) G_j = 2 [n=1].
inline std::vector<Rational> genocchi(long n_max) {
  std::vector<Rational> g{Rational(0)};
  for (long n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (long j = 0; j < n; ++j)
      acc += Rational(unigen::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
             g[static_cast<std::size_t>(j)];
    g.push_back((Rational(n == 1 ? 2 : 0) - acc) / Rational(2));
  }
  return g;
}

// E_0(0)..E_n(0) from 2 E_n(0) + sum_{j<n} C(n,j) E_j(0) = 2 [n=0].
inline std::vector<Rational> euler_at_zero(long n_max) {
  std::vector<Rational> e{Rational(1)};
  for (long n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (long j = 0; j < n; ++j)
      acc += Rational(unigen::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
             e[static_cast<std::size_t>(j)];
    e.push_back(-acc / Rational(2));
  }
  return e;
}

// Bernoulli polynomial values B_n(x) = sum_j C(n,j) B_j x^{n-j}, from the
// recurrence table above.
inline Rational bernoulli_poly(const std::vector<Rational>& b, long n, const Rational& x) {
  Rational acc(0);
  for (long j = 0; j <= n; ++j)
    acc += Rational(unigen::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
           b[static_cast<std::size_t>(j)] * x.pow(n - j);
  return acc;
}

// Literal h-fold tuple sum:
//   sum over n_1..n_h >= 0 with 0 < n_1+...+n_h <= total_cap of
//   rho^{sum} * sum^{-s} (s real).
inline std::complex<double> zeta_tuple_sum(std::complex<double> rho, double s_re, long h,
                                           long total_cap) {
  std::complex<double> acc{0.0, 0.0};
  std::vector<long> tuple(static_cast<std::size_t>(h), 0);
  auto rec = [&](auto&& self, long index, long used) -> void {
    if (index == h) {
      if (used == 0) return;
      std::complex<double> rho_pow{1.0, 0.0};
      for (long i = 0; i < used; ++i) rho_pow *= rho;
      acc += rho_pow * std::pow(static_cast<double>(used), -s_re);
      return;
    }
    for (long v = 0; used + v <= total_cap; ++v) {
      tuple[static_cast<std::size_t>(index)] = v;
      self(self, index + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  return acc;
}

}  // namespace oracles
