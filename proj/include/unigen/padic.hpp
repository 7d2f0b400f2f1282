#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unigen/twisted.hpp"

namespace unigen {

// Two distinct moment operators, deliberately separated:
//
//  PaperSigned      J_n, the functional-equation solution for the integrand
//                   carrying the extra (-1)^{x+1} sign, i.e. the object the
//                   generating-function proofs actually use. Invariant:
//                   J_n - r * sum_{j<=n} C(n,j) J_j = -2 [n=0]. Singular at r = 1.
//
//  StandardFermionic M_n, the classical alternating-sum limit for the plain
//                   integrand r^x x^n. Invariant:
//                   M_n + r * sum_{j<=n} C(n,j) M_j = 2 [n=0]. Singular at r = -1.
//
// For the signed integrand the literal alternating-sum limit is zero whenever
// it converges, so only the standard mode is ever compared against genuine
// truncated sums; the paper-signed mode is verified algebraically.
enum class MomentMode { PaperSigned, StandardFermionic };

class MomentTable {
 public:
  MomentTable(MomentMode mode, Cyclotomic ratio, std::vector<Cyclotomic> moments)
      : mode_(mode), ratio_(std::move(ratio)), moments_(std::move(moments)) {}

  MomentMode mode() const { return mode_; }
  const Cyclotomic& ratio() const { return ratio_; }
  const std::vector<Cyclotomic>& moments() const { return moments_; }
  long n_max() const { return static_cast<long>(moments_.size()) - 1; }

  // Re-substitutes every stored moment into the defining recurrence.
  bool invariant_holds() const;

 private:
  MomentMode mode_;
  Cyclotomic ratio_;
  std::vector<Cyclotomic> moments_;
};

// Triangular solve of the paper-signed functional equation; SingularOperator
// (PoleError) at r = 1, where 0*J_0 = -2 has no solution.
MomentTable paper_operator_moments(const Cyclotomic& r, long n_max);

// Triangular solve of the standard fermionic equation; singular at r = -1.
MomentTable standard_fermionic_moments(const Cyclotomic& r, long n_max);

// Literal truncated alternating sums S_N = sum_{x < p^N} r^x x^n (-1)^x with
// the p-adic distance to the closed-form moment at each depth.
struct PartialSumTrace {
  unsigned long p = 3;
  long n = 0;
  Rational r;
  Rational limit;                        // M_n from the standard operator
  std::vector<Rational> sums;            // S_1..S_Nmax
  std::vector<PadicValuation> valuations;  // v_p(S_N - M_n)
  long convergence_constant = 0;         // smallest c with v_N >= N - c for all N
  bool monotone = true;
};

// Convergence precondition: vp(r - 1) >= 1, the exact condition under which
// u = -r satisfies u^{p^N} -> -r-limit (derived from (u^{p^N}-1)/(u-1)).
PartialSumTrace fermionic_partial_sums(unsigned long p, long n_max_depth, const Rational& r,
                                       long n);

// Checks the shift equation I(f_shift) + (-1)^{shift-1} I(f) =
// 2 sum_{x<shift} f(x) (-1)^{shift-1-x} for f(x) = r^x x^m (standard mode)
// and f(x) = (-1)^{x+1} r^x x^m (paper-signed mode), each shift in `shifts`,
// each degree m in `degrees`. Modes whose operator is singular at r are
// reported as skipped in the notes.
VerificationReport verify_functional_equation(const Cyclotomic& r, const std::vector<long>& degrees,
                                              const std::vector<long>& shifts);

// The central dual-path test: moment-recurrence path against series-division
// path, exactly.
//  (i)   a^{-b} 2^{-k} J_n                      == y_{n+k,w,beta}(k,a,b) / (k! C(n+k,k))
//  (ii)  a^{-b} 2^{-k} sum_j C(n,j) x^{n-j} J_j == y_{n+k,w,beta}(x:k,a,b) * n!/(n+k)!
//  (iii) a^{-hb} 2^{-hk} * (multinomial convolution of J-moments, x on the
//        last factor)                           == y^{(h)}_{n+kh,w,beta}(x:k,a,b) * n!/(n+kh)!
// Singular (PoleError) when w (beta/a)^b = 1: Bernoulli-type parameters have
// no moment operator; the t^k prefactor exists only at series level.
VerificationReport witt_cross_check(const TwistedParams& tp, const Rational& x, long n_max);

}  // namespace unigen
