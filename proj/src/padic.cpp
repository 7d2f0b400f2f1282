#include "unigen/padic.hpp"

#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

namespace {
const Cyclotomic kOne{Rational(1)};

Cyclotomic rat_binom_c(unsigned long n, unsigned long k) { return Cyclotomic(Rational(binomial(n, k))); }
}  // namespace

bool MomentTable::invariant_holds() const {
  for (long n = 0; n <= n_max(); ++n) {
    Cyclotomic conv;
    for (long j = 0; j <= n; ++j)
      conv += rat_binom_c(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
              moments_[static_cast<std::size_t>(j)];
    const Cyclotomic target = Cyclotomic(Rational(n == 0 ? (mode_ == MomentMode::PaperSigned ? -2 : 2) : 0));
    const Cyclotomic lhs = mode_ == MomentMode::PaperSigned
                               ? moments_[static_cast<std::size_t>(n)] - ratio_ * conv
                               : moments_[static_cast<std::size_t>(n)] + ratio_ * conv;
    if (!(lhs == target)) return false;
  }
  return true;
}

MomentTable paper_operator_moments(const Cyclotomic& r, long n_max) {
  if (r == kOne)
    throw PoleError(
        "singular moment operator: r = 1 makes the paper-signed functional equation "
        "0*J_0 = -2 unsolvable (Bernoulli-type parameters)");
  // J_0 = 2/(r-1); J_n = r/(1-r) * sum_{j<n} C(n,j) J_j.
  std::vector<Cyclotomic> j(static_cast<std::size_t>(n_max) + 1);
  const Cyclotomic one_minus_r_inv = (kOne - r).inverse();
  j[0] = (r - kOne).inverse() * Cyclotomic(Rational(2));
  const Cyclotomic step = r * one_minus_r_inv;
  for (long n = 1; n <= n_max; ++n) {
    Cyclotomic acc;
    for (long i = 0; i < n; ++i)
      acc += rat_binom_c(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
             j[static_cast<std::size_t>(i)];
    j[static_cast<std::size_t>(n)] = step * acc;
  }
  return MomentTable(MomentMode::PaperSigned, r, std::move(j));
}

MomentTable standard_fermionic_moments(const Cyclotomic& r, long n_max) {
  if (r == Cyclotomic(Rational(-1)))
    throw PoleError("singular moment operator: r = -1 makes the standard fermionic equation "
                    "0*M_0 = 2 unsolvable");
  // M_0 = 2/(1+r); M_n = -r/(1+r) * sum_{j<n} C(n,j) M_j.
  std::vector<Cyclotomic> m(static_cast<std::size_t>(n_max) + 1);
  const Cyclotomic one_plus_r_inv = (kOne + r).inverse();
  m[0] = one_plus_r_inv * Cyclotomic(Rational(2));
  const Cyclotomic step = -(r * one_plus_r_inv);
  for (long n = 1; n <= n_max; ++n) {
    Cyclotomic acc;
    for (long i = 0; i < n; ++i)
      acc += rat_binom_c(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
             m[static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(n)] = step * acc;
  }
  return MomentTable(MomentMode::StandardFermionic, r, std::move(m));
}

PartialSumTrace fermionic_partial_sums(unsigned long p, long n_max_depth, const Rational& r,
                                       long n) {
  if (!is_prime(p) || p == 2) throw DomainError("partial sums require an odd prime p");
  if (n_max_depth < 1) throw DomainError("depth must be at least 1");
  if (n < 0) throw DomainError("moment degree n must be non-negative");
  const PadicValuation conv = vp(r - Rational(1), p);
  if (conv < PadicValuation::finite(1))
    throw ConvergenceError("partial sums converge only when vp(r-1) >= 1; got vp = " + conv.str() +
                           " for r = " + r.str() + ", p = " + std::to_string(p));
  // Guard against accidental huge depths: p^depth terms are summed literally.
  long double budget = 1.0L;
  for (long i = 0; i < n_max_depth; ++i) budget *= static_cast<long double>(p);
  if (budget > 2e7L)
    throw DomainError("p^depth exceeds the literal-summation budget; lower the depth");

  PartialSumTrace trace;
  trace.p = p;
  trace.n = n;
  trace.r = r;
  const MomentTable moments = standard_fermionic_moments(Cyclotomic(r), n);
  trace.limit = moments.moments().back().rational_value();

  mpz_class p_pow_next(static_cast<unsigned long>(p));
  Rational sum(0);
  Rational r_pow(1);
  mpz_class x(0);
  long depth = 1;
  while (depth <= n_max_depth) {
    // accumulate terms until x == p^depth
    while (x < p_pow_next) {
      mpz_class xn;
      mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
      Rational term = r_pow * Rational(xn);
      if (mpz_odd_p(x.get_mpz_t())) term = -term;
      sum += term;
      r_pow *= r;
      ++x;
    }
    trace.sums.push_back(sum);
    trace.valuations.push_back(vp(sum - trace.limit, p));
    p_pow_next *= static_cast<unsigned long>(p);
    ++depth;
  }
  trace.convergence_constant = 0;
  for (std::size_t i = 0; i < trace.valuations.size(); ++i) {
    const long N = static_cast<long>(i) + 1;
    if (i > 0 && trace.valuations[i] < trace.valuations[i - 1]) trace.monotone = false;
    if (!trace.valuations[i].is_infinite())
      trace.convergence_constant = std::max(trace.convergence_constant, N - trace.valuations[i].value());
  }
  return trace;
}

namespace {

// I(f_shift) via the binomial expansion of (x + shift)^m against the stored moments.
Cyclotomic shifted_moment(const MomentTable& table, long m, long shift) {
  Cyclotomic acc;
  for (long j = 0; j <= m; ++j)
    acc += rat_binom_c(static_cast<unsigned long>(m), static_cast<unsigned long>(j)) *
           Cyclotomic(Rational(shift).pow(m - j)) * table.moments()[static_cast<std::size_t>(j)];
  const Cyclotomic r_pow = table.ratio().pow(shift);
  if (table.mode() == MomentMode::PaperSigned && shift % 2 != 0) return -(r_pow * acc);
  return r_pow * acc;
}

// f(x) at integer points for the boundary sum of the shift equation.
Cyclotomic integrand_value(MomentMode mode, const Cyclotomic& r, long m, long x) {
  Cyclotomic v = r.pow(x) * Cyclotomic(Rational(x).pow(m));
  if (mode == MomentMode::PaperSigned && x % 2 == 0) v = -v;  // (-1)^{x+1}
  return v;
}

}  // namespace

VerificationReport verify_functional_equation(const Cyclotomic& r, const std::vector<long>& degrees,
                                              const std::vector<long>& shifts) {
  std::ostringstream ps;
  ps << "r=" << r.str();
  VerificationReport report = VerificationReport::pass("functional-equation", ps.str(), 0);
  long checked = 0;
  for (MomentMode mode : {MomentMode::PaperSigned, MomentMode::StandardFermionic}) {
    const char* mode_name = mode == MomentMode::PaperSigned ? "paper-signed" : "standard";
    long max_degree = 0;
    for (long m : degrees) max_degree = std::max(max_degree, m);
    MomentTable table(mode, r, {});
    try {
      table = mode == MomentMode::PaperSigned ? paper_operator_moments(r, max_degree)
                                              : standard_fermionic_moments(r, max_degree);
    } catch (const PoleError&) {
      report.notes.push_back(std::string(mode_name) + " operator singular at this r; skipped");
      continue;
    }
    for (long m : degrees) {
      for (long shift : shifts) {
        if (shift < 1) throw DomainError("shift must be a positive integer");
        const Cyclotomic lhs_shifted = shifted_moment(table, m, shift);
        const long sign = (shift - 1) % 2 == 0 ? 1 : -1;
        const Cyclotomic lhs =
            lhs_shifted + Cyclotomic(Rational(sign)) * table.moments()[static_cast<std::size_t>(m)];
        Cyclotomic rhs;
        for (long xv = 0; xv < shift; ++xv) {
          const long s = (shift - 1 - xv) % 2 == 0 ? 1 : -1;
          rhs += Cyclotomic(Rational(2 * s)) * integrand_value(mode, r, m, xv);
        }
        ++checked;
        if (!(lhs == rhs)) {
          auto fail = VerificationReport::fail("functional-equation", ps.str(),
                                               m, lhs.str(), rhs.str());
          fail.notes.push_back(std::string("mode ") + mode_name + ", shift " +
                               std::to_string(shift));
          return fail;
        }
      }
    }
  }
  report.checked = checked;
  return report;
}

VerificationReport witt_cross_check(const TwistedParams& tp, const Rational& x, long n_max) {
  std::ostringstream ps;
  ps << tp.str() << " x=" << x;
  if (!tp.regular())
    throw PoleError(
        "witt cross-check: w*(beta/a)^b = 1 (Bernoulli-type parameters) has no moment operator; "
        "only the series route exists for these parameters (" + tp.str() + ")");
  const long k = tp.base().k();
  const long h = tp.h();
  const MomentTable table = paper_operator_moments(tp.ratio(), n_max);
  const Cyclotomic unit_scale =
      Cyclotomic(tp.base().a().pow(-tp.base().b()) * Rational(2).pow(-k));

  TwistedParams single(tp.base(), tp.w(), 1);
  const auto y_numbers = multiple_scaled_moments(single, Rational(0), n_max);
  const auto y_values = multiple_scaled_moments(single, x, n_max);

  // (i) number moments
  for (long n = 0; n <= n_max; ++n) {
    const Cyclotomic lhs = unit_scale * table.moments()[static_cast<std::size_t>(n)];
    if (!(lhs == y_numbers[static_cast<std::size_t>(n)]))
      return VerificationReport::fail("witt", ps.str() + " [numbers]", n, lhs.str(),
                                      y_numbers[static_cast<std::size_t>(n)].str());
  }
  // (ii) x-shifted moments
  for (long n = 0; n <= n_max; ++n) {
    Cyclotomic acc;
    for (long j = 0; j <= n; ++j)
      acc += rat_binom_c(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
             Cyclotomic(x.pow(n - j)) * table.moments()[static_cast<std::size_t>(j)];
    const Cyclotomic lhs = unit_scale * acc;
    if (!(lhs == y_values[static_cast<std::size_t>(n)]))
      return VerificationReport::fail("witt", ps.str() + " [polynomials]", n, lhs.str(),
                                      y_values[static_cast<std::size_t>(n)].str());
  }
  // (iii) h-fold convolution against the h-power series
  const auto y_multi = multiple_scaled_moments(tp, x, n_max);
  const Cyclotomic multi_scale = unit_scale.pow(h);
  for (long n = 0; n <= n_max; ++n) {
    Cyclotomic conv;
    for_each_composition(n, h, [&](const Rational& multinomial, const std::vector<long>& parts) {
      Cyclotomic term(Rational(1));
      for (long i = 0; i + 1 < h; ++i)
        term *= table.moments()[static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])];
      const long lh = parts[static_cast<std::size_t>(h - 1)];
      Cyclotomic xm;
      for (long j = 0; j <= lh; ++j)
        xm += rat_binom_c(static_cast<unsigned long>(lh), static_cast<unsigned long>(j)) *
              Cyclotomic(x.pow(lh - j)) * table.moments()[static_cast<std::size_t>(j)];
      conv += Cyclotomic(multinomial) * term * xm;
    });
    const Cyclotomic lhs = multi_scale * conv;
    if (!(lhs == y_multi[static_cast<std::size_t>(n)]))
      return VerificationReport::fail("witt", ps.str() + " [multiple]", n, lhs.str(),
                                      y_multi[static_cast<std::size_t>(n)].str());
  }
  auto report = VerificationReport::pass("witt", ps.str(), 3 * (n_max + 1));
  report.notes.push_back("numbers, polynomials, and h-fold routes all agree exactly");
  return report;
}

}  // namespace unigen
