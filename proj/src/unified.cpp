#include "unigen/unified.hpp"

#include <numeric>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

namespace {
const Cyclotomic kZero{};

Rational rat_binomial(unsigned long n, unsigned long k) { return Rational(binomial(n, k)); }
}  // namespace

UnifiedParams::UnifiedParams(long k, Rational a, long b, Cyclotomic beta)
    : k_(k), a_(std::move(a)), b_(b), beta_(std::move(beta)) {
  if (k_ < 0) throw DomainError("k must be a non-negative integer");
  if (a_.sign() <= 0) throw DomainError("a must be a positive rational");
  if (b_ < 1) throw DomainError("b must be a positive integer");
  if (beta_.is_zero()) throw DomainError("beta must be nonzero");
  ratio_pow_b_ = (beta_ * Cyclotomic(a_.inverse())).pow(b_);
  regular_ = !(ratio_pow_b_ == Cyclotomic(Rational(1)));
}

std::string UnifiedParams::str() const {
  std::ostringstream os;
  os << "k=" << k_ << " a=" << a_ << " b=" << b_ << " beta=" << beta_;
  return os.str();
}

PolyInX::PolyInX(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Cyclotomic& PolyInX::coeff(long i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Cyclotomic PolyInX::evaluate(const Rational& x) const { return evaluate(Cyclotomic(x)); }

Cyclotomic PolyInX::evaluate(const Cyclotomic& x) const {
  Cyclotomic acc;
  for (long i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
  return acc;
}

std::string PolyInX::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= degree(); ++i) {
    const Cyclotomic& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

DirichletCharacter::DirichletCharacter(unsigned long modulus, unsigned long root_order,
                                       std::vector<std::optional<unsigned long>> values)
    : modulus_(modulus), root_order_(root_order), values_(std::move(values)) {
  if (modulus_ == 0) throw ParseError("character modulus must be positive");
  if (root_order_ == 0) throw ParseError("character root order must be positive");
  if (values_.size() != modulus_)
    throw ParseError("character table must list exactly d residues, got " +
                     std::to_string(values_.size()));
  for (auto& v : values_)
    if (v) *v %= root_order_;
  std::vector<unsigned long> units;
  for (unsigned long j = 0; j < modulus_; ++j) {
    const bool unit = std::gcd(j, modulus_) == 1;
    if (unit != values_[j].has_value())
      throw ParseError(unit ? "character table misses the unit residue " + std::to_string(j)
                            : "character table assigns a nonzero value to the non-unit residue " +
                                  std::to_string(j));
    if (unit) units.push_back(j);
  }
  const unsigned long one = 1 % modulus_;
  if (*values_[one] != 0) throw ParseError("character table violates chi(1) = 1");
  for (unsigned long j : units)
    for (unsigned long k : units) {
      const unsigned long lhs = *values_[(j * k) % modulus_];
      const unsigned long rhs = (*values_[j] + *values_[k]) % root_order_;
      if (lhs != rhs)
        throw ParseError("character table is not multiplicative at (" + std::to_string(j) + "," +
                         std::to_string(k) + ")");
    }
}

DirichletCharacter DirichletCharacter::principal(unsigned long modulus) {
  std::vector<std::optional<unsigned long>> values(modulus);
  for (unsigned long j = 0; j < modulus; ++j)
    if (std::gcd(j, modulus) == 1) values[j] = 0;
  return DirichletCharacter(modulus, 1, std::move(values));
}

Cyclotomic DirichletCharacter::operator()(long j) const {
  long r = j % static_cast<long>(modulus_);
  if (r < 0) r += static_cast<long>(modulus_);
  const auto& v = values_[static_cast<std::size_t>(r)];
  if (!v) return Cyclotomic();
  return Cyclotomic::root_of_unity(root_order_, static_cast<long>(*v));
}

bool DirichletCharacter::is_zero_at(long j) const {
  long r = j % static_cast<long>(modulus_);
  if (r < 0) r += static_cast<long>(modulus_);
  return !values_[static_cast<std::size_t>(r)].has_value();
}

std::string DirichletCharacter::str() const {
  std::ostringstream os;
  os << "chi mod " << modulus_ << " (order " << root_order_ << ":";
  for (unsigned long j = 0; j < modulus_; ++j) {
    os << " ";
    if (values_[j])
      os << *values_[j];
    else
      os << "-";
  }
  os << ")";
  return os.str();
}

long default_truncation(long n_max, long k, long h) { return n_max + k * h + 4; }

TruncatedLaurentSeries unified_kernel(const UnifiedParams& p, const Cyclotomic& twist, long trunc) {
  const Cyclotomic lead = twist * p.beta().pow(p.b());
  const Cyclotomic ab = Cyclotomic(p.a().pow(p.b()));
  const auto num =
      TruncatedLaurentSeries::monomial(Cyclotomic(Rational(2).pow(1 - p.k())), p.k(), trunc);
  const auto den = TruncatedLaurentSeries::exp_linear(Cyclotomic(Rational(1)), trunc).scaled(lead) -
                   TruncatedLaurentSeries::constant(ab, trunc);
  const auto q = TruncatedLaurentSeries::div(num, den);
  if (q.valuation() < 0)
    throw PoleError("generating kernel has a pole at t = 0: k = 0 with (twist)*beta^b = a^b (" +
                    p.str() + ")");
  return q;
}

std::vector<Cyclotomic> unified_numbers(const UnifiedParams& p, long n_max,
                                        std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, p.k(), 1));
  const auto f = unified_kernel(p, Cyclotomic(Rational(1)), T);
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

std::vector<PolyInX> unified_polynomials(const UnifiedParams& p, long n_max,
                                         std::optional<long> trunc) {
  const auto numbers = unified_numbers(p, n_max, trunc);
  std::vector<PolyInX> out;
  out.reserve(numbers.size());
  for (long n = 0; n <= n_max; ++n) {
    std::vector<Cyclotomic> coeffs(static_cast<std::size_t>(n) + 1);
    // coefficient of x^i in y_n(x) = sum_j C(n,j) y_j x^{n-j}
    for (long i = 0; i <= n; ++i)
      coeffs[static_cast<std::size_t>(i)] =
          numbers[static_cast<std::size_t>(n - i)] *
          Cyclotomic(rat_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

std::vector<Cyclotomic> unified_poly_values_series(const UnifiedParams& p, const Rational& x,
                                                   long n_max, std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, p.k(), 1));
  const auto f = unified_kernel(p, Cyclotomic(Rational(1)), T) *
                 TruncatedLaurentSeries::exp_linear(Cyclotomic(x), T);
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

namespace {

// 2 (t/2)^k sum_{j mod d} chi(j) (beta/a)^{bj} e^{jt} / (beta^{bd} e^{dt} - a^{bd}).
// The sum runs over the residues 0..d-1: only the j = 0 (equivalently j = d)
// term distinguishes the possible index conventions, and it vanishes for
// every d > 1; taking residues makes the d = 1 principal character reduce to
// the plain unified family and keeps the character distribution identity
// exact.
TruncatedLaurentSeries char_kernel(const DirichletCharacter& chi, const UnifiedParams& p,
                                   long trunc) {
  const long d = static_cast<long>(chi.modulus());
  const Cyclotomic ratio_b = p.ratio_pow_b();  // (beta/a)^b
  auto weighted = TruncatedLaurentSeries::zero(trunc);
  for (long j = 0; j < d; ++j) {
    const Cyclotomic weight = chi(j) * ratio_b.pow(j);
    if (weight.is_zero()) continue;
    weighted = weighted +
               TruncatedLaurentSeries::exp_linear(Cyclotomic(Rational(j)), trunc).scaled(weight);
  }
  const auto num =
      TruncatedLaurentSeries::monomial(Cyclotomic(Rational(2).pow(1 - p.k())), p.k(), trunc) *
      weighted;
  const auto den = TruncatedLaurentSeries::exp_linear(Cyclotomic(Rational(d)), trunc)
                       .scaled(p.beta().pow(p.b() * d)) -
                   TruncatedLaurentSeries::constant(Cyclotomic(p.a().pow(p.b() * d)), trunc);
  const auto q = TruncatedLaurentSeries::div(num, den);
  if (q.valuation() < 0)
    throw PoleError("character kernel has a pole at t = 0: k = 0 with beta^{bd} = a^{bd} (" +
                    p.str() + ", d=" + std::to_string(d) + ")");
  return q;
}

}  // namespace

std::vector<Cyclotomic> char_numbers(const DirichletCharacter& chi, const UnifiedParams& p,
                                     long n_max, std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, p.k(), 1) +
                                static_cast<long>(chi.modulus()));
  const auto f = char_kernel(chi, p, T);
  std::vector<Cyclotomic> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

std::vector<Cyclotomic> char_poly_values(const DirichletCharacter& chi, const UnifiedParams& p,
                                         const Rational& x, long n_max, std::optional<long> trunc) {
  const long T = trunc.value_or(default_truncation(n_max, p.k(), 1) +
                                static_cast<long>(chi.modulus()));
  const auto f = char_kernel(chi, p, T) * TruncatedLaurentSeries::exp_linear(Cyclotomic(x), T);
  std::vector<Cyclotomic> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(extract_y(f, n));
  return out;
}

VerificationReport verify_symmetry(const UnifiedParams& p, const Rational& x, long n_max) {
  std::ostringstream ps;
  ps << p.str() << " x=" << x;
  const UnifiedParams reflected(p.k(), p.a().inverse(), p.b(), p.beta().inverse());
  const auto lhs = unified_poly_values_series(reflected, Rational(1) - x, n_max);
  const auto rhs_base = unified_poly_values_series(p, x, n_max);
  const Cyclotomic scale = p.beta().pow(p.b()) * Cyclotomic(p.a().pow(p.b()));
  for (long n = 0; n <= n_max; ++n) {
    const long sign = ((p.k() + n + 1) % 2 == 0) ? 1 : -1;
    const Cyclotomic rhs =
        rhs_base[static_cast<std::size_t>(n)] * scale * Cyclotomic(Rational(sign));
    if (!(lhs[static_cast<std::size_t>(n)] == rhs))
      return VerificationReport::fail("symmetry", ps.str(), n,
                                      lhs[static_cast<std::size_t>(n)].str(), rhs.str());
  }
  return VerificationReport::pass("symmetry", ps.str(), n_max + 1);
}

VerificationReport verify_distribution(const UnifiedParams& p, unsigned long d, const Rational& x,
                                       long n_max) {
  std::ostringstream ps;
  ps << p.str() << " d=" << d << " x=" << x;
  if (d == 0) throw DomainError("distribution requires d >= 1");
  const auto lhs = unified_poly_values_series(p, x, n_max);
  const UnifiedParams pd(p.k(), p.a().pow(static_cast<long>(d)), p.b(),
                         p.beta().pow(static_cast<long>(d)));
  std::vector<std::vector<Cyclotomic>> shifted;
  for (unsigned long j = 0; j < d; ++j)
    shifted.push_back(unified_poly_values_series(
        pd, (x + Rational(static_cast<long>(j))) / Rational(static_cast<long>(d)), n_max));
  const Cyclotomic a_pow = Cyclotomic(p.a().pow(p.b() * (static_cast<long>(d) - 1)));
  for (long n = 0; n <= n_max; ++n) {
    Cyclotomic sum;
    for (unsigned long j = 0; j < d; ++j)
      sum += p.ratio_pow_b().pow(static_cast<long>(j)) *
             shifted[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
    const Cyclotomic rhs =
        a_pow * Cyclotomic(Rational(static_cast<long>(d)).pow(n - p.k())) * sum;
    if (!(lhs[static_cast<std::size_t>(n)] == rhs))
      return VerificationReport::fail("distribution", ps.str(), n,
                                      lhs[static_cast<std::size_t>(n)].str(), rhs.str());
  }
  return VerificationReport::pass("distribution", ps.str(), n_max + 1);
}

VerificationReport verify_binomial_convolution(const UnifiedParams& p, const Rational& x,
                                               long n_max) {
  std::ostringstream ps;
  ps << p.str() << " x=" << x;
  if (!p.regular()) {
    return VerificationReport::skip(
        "binomial-convolution", ps.str(),
        "degenerate parameters beta^b = a^b: y_0 != 0 gives the left side x-degree n+k while the "
        "right side has degree n, so the identity cannot hold; requires (beta/a)^b != 1");
  }
  const long k = p.k();
  const auto lhs_vals = unified_poly_values_series(p, x, n_max + k);
  const auto numbers = unified_numbers(p, n_max + k);
  const Cyclotomic cx(x);
  for (long n = 0; n <= n_max; ++n) {
    const Cyclotomic lhs =
        lhs_vals[static_cast<std::size_t>(n + k)] *
        Cyclotomic(rat_binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(k))
                       .inverse());
    Cyclotomic rhs;
    for (long m = 0; m <= n; ++m) {
      const Rational w =
          rat_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) /
          rat_binomial(static_cast<unsigned long>(m + k), static_cast<unsigned long>(k));
      rhs += Cyclotomic(w) * numbers[static_cast<std::size_t>(m + k)] * cx.pow(n - m);
    }
    if (!(lhs == rhs))
      return VerificationReport::fail("binomial-convolution", ps.str(), n, lhs.str(), rhs.str());
  }
  return VerificationReport::pass("binomial-convolution", ps.str(), n_max + 1);
}

VerificationReport verify_char_distribution(const DirichletCharacter& chi, const UnifiedParams& p,
                                            const Rational& x, long n_max) {
  std::ostringstream ps;
  ps << p.str() << " x=" << x << " " << chi.str();
  const unsigned long d = chi.modulus();
  const auto lhs = char_poly_values(chi, p, x, n_max);
  const UnifiedParams pd(p.k(), p.a().pow(static_cast<long>(d)), p.b(),
                         p.beta().pow(static_cast<long>(d)));
  std::vector<std::vector<Cyclotomic>> shifted;
  for (unsigned long j = 0; j < d; ++j) {
    if (chi.is_zero_at(static_cast<long>(j))) {
      shifted.emplace_back();
      continue;
    }
    shifted.push_back(unified_poly_values_series(
        pd, (x + Rational(static_cast<long>(j))) / Rational(static_cast<long>(d)), n_max));
  }
  for (long n = 0; n <= n_max; ++n) {
    Cyclotomic sum;
    for (unsigned long j = 0; j < d; ++j) {
      if (chi.is_zero_at(static_cast<long>(j))) continue;
      sum += chi(static_cast<long>(j)) * p.ratio_pow_b().pow(static_cast<long>(j)) *
             shifted[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
    }
    const Cyclotomic rhs = Cyclotomic(Rational(static_cast<long>(d)).pow(n - p.k())) * sum;
    if (!(lhs[static_cast<std::size_t>(n)] == rhs))
      return VerificationReport::fail("char-distribution", ps.str(), n,
                                      lhs[static_cast<std::size_t>(n)].str(), rhs.str());
  }
  return VerificationReport::pass("char-distribution", ps.str(), n_max + 1);
}

}  // namespace unigen
