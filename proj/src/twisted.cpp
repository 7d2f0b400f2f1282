#include "unigen/twisted.hpp"

#include <functional>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

TwistedParams::TwistedParams(UnifiedParams base, RootOfUnity w, long h)
    : base_(std::move(base)), w_(w), h_(h) {
  if (h_ < 1) throw DomainError("multiplicity h must be a positive integer");
  ratio_ = w_.value() * base_.ratio_pow_b();
  regular_ = !(ratio_ == Cyclotomic(Rational(1)));
}

std::string TwistedParams::str() const {
  std::ostringstream os;
  os << base_.str() << " w=" << w_.str() << " h=" << h_;
  return os.str();
}

TruncatedLaurentSeries multiple_twisted_series(const TwistedParams& tp, const Rational& x,
                                               long trunc) {
  auto f = unified_kernel(tp.base(), tp.w().value(), trunc).pow(tp.h());
  if (!x.is_zero()) f = f * TruncatedLaurentSeries::exp_linear(Cyclotomic(x), trunc);
  return f;
}

std::vector<Cyclotomic> twisted_numbers(const TwistedParams& tp, long n_max,
                                        std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, tp.base().k(), 1));
  const auto f = unified_kernel(tp.base(), tp.w().value(), T);
  std::vector<Cyclotomic> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

std::vector<Cyclotomic> multiple_twisted_polys(const TwistedParams& tp, const Rational& x,
                                               long n_max, std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, tp.base().k(), tp.h()));
  const auto f = multiple_twisted_series(tp, x, T);
  std::vector<Cyclotomic> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

std::vector<Cyclotomic> multiple_scaled_moments(const TwistedParams& tp, const Rational& x,
                                                long n_max, std::optional<long> trunc) {
  const long kh = tp.base().k() * tp.h();
  const long T = trunc.value_or(default_truncation(n_max, tp.base().k(), tp.h()));
  const auto f = multiple_twisted_series(tp, x, T);
  std::vector<Cyclotomic> out;
  for (long n = 0; n <= n_max; ++n) {
    // y^{(h)}_{n+kh}(x) * n!/(n+kh)! = [t^{n+kh}] f * n!
    const Cyclotomic c = f.coeff(n + kh);
    out.push_back(c * Cyclotomic(Rational(factorial(static_cast<unsigned long>(n)))));
  }
  return out;
}

void for_each_composition(long n, long h,
                          const std::function<void(const Rational&, const std::vector<long>&)>& visit) {
  std::vector<long> parts(static_cast<std::size_t>(h), 0);
  const Rational n_fact(factorial(static_cast<unsigned long>(n)));
  std::function<void(long, long)> rec = [&](long index, long remaining) {
    if (index == h - 1) {
      parts[static_cast<std::size_t>(index)] = remaining;
      Rational denom(1);
      for (long p : parts) denom *= Rational(factorial(static_cast<unsigned long>(p)));
      visit(n_fact / denom, parts);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(index)] = v;
      rec(index + 1, remaining - v);
    }
  };
  rec(0, n);
}

namespace {

// h = 1 scaled moments with x: y_{l+k,w,beta}(x:k,a,b)/(k! C(l+k,k)).
std::vector<Cyclotomic> single_scaled_moments(const TwistedParams& tp, const Rational& x,
                                              long n_max) {
  TwistedParams single(tp.base(), tp.w(), 1);
  return multiple_scaled_moments(single, x, n_max);
}

VerificationReport verify_convolution_impl(const char* identity, const TwistedParams& tp,
                                           const Rational& x, long n_max) {
  std::ostringstream ps;
  ps << tp.str() << " x=" << x;
  if (!tp.regular())
    return VerificationReport::skip(identity, ps.str(),
                                    "requires regular parameters: w*(beta/a)^b != 1");
  const long h = tp.h();
  const auto lhs = multiple_scaled_moments(tp, x, n_max);
  const auto m_plain = single_scaled_moments(tp, Rational(0), n_max);
  const auto m_x = x.is_zero() ? m_plain : single_scaled_moments(tp, x, n_max);
  // Literal printed form reuses the h-power moments themselves as factors.
  const auto printed_plain = multiple_scaled_moments(tp, Rational(0), n_max);
  const auto& printed_x = x.is_zero() ? printed_plain : lhs;

  VerificationReport report = VerificationReport::pass(identity, ps.str(), n_max + 1);
  bool printed_agrees = true;
  long printed_first = -1;
  for (long n = 0; n <= n_max; ++n) {
    Cyclotomic rhs, rhs_printed;
    for_each_composition(n, h, [&](const Rational& multinomial, const std::vector<long>& parts) {
      Cyclotomic term(Rational(1)), term_printed(Rational(1));
      for (long i = 0; i < h; ++i) {
        const auto part = static_cast<std::size_t>(parts[static_cast<std::size_t>(i)]);
        const bool carries_x = (i == h - 1);
        term *= carries_x ? m_x[part] : m_plain[part];
        term_printed *= carries_x ? printed_x[part] : printed_plain[part];
      }
      rhs += Cyclotomic(multinomial) * term;
      rhs_printed += Cyclotomic(multinomial) * term_printed;
    });
    if (!(lhs[static_cast<std::size_t>(n)] == rhs)) {
      report = VerificationReport::fail(identity, ps.str(), n,
                                        lhs[static_cast<std::size_t>(n)].str(), rhs.str());
      break;
    }
    if (printed_agrees && !(lhs[static_cast<std::size_t>(n)] == rhs_printed)) {
      printed_agrees = false;
      printed_first = n;
    }
  }
  report.printed_form_agrees = printed_agrees;
  report.printed_form_first_disagreement = printed_first;
  report.notes.push_back(printed_agrees
                             ? "printed form (y^{(h)} factors) agrees on the checked range"
                             : "printed form (y^{(h)} factors) first disagrees at n = " +
                                   std::to_string(printed_first) +
                                   "; the proof-consistent single-moment form is the verified one");
  return report;
}

}  // namespace

VerificationReport verify_multinomial_convolution(const TwistedParams& tp, long n_max) {
  return verify_convolution_impl("multinomial-convolution", tp, Rational(0), n_max);
}

VerificationReport verify_sum_of_powers(const TwistedParams& tp, const Rational& x, long n_max) {
  return verify_convolution_impl("sum-of-powers", tp, x, n_max);
}

}  // namespace unigen
