#include "unigen/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

namespace {

constexpr unsigned long kMaxOrder = 4096;  // keeps Phi_m degrees tractable

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

// Remainder of p modulo the monic integer polynomial phi.
QPoly mod_monic(QPoly p, const std::vector<mpz_class>& phi) {
  const long d = static_cast<long>(phi.size()) - 1;
  for (long i = degree(p); i >= d; --i) {
    const Rational c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    p[static_cast<std::size_t>(i)] = Rational(0);
    for (long j = 0; j < d; ++j)
      p[static_cast<std::size_t>(i - d + j)] -= c * Rational(phi[static_cast<std::size_t>(j)]);
  }
  p.resize(static_cast<std::size_t>(d));
  return p;
}

// Quotient/remainder over Q[x]; divisor need not be monic.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  QPoly d = den;
  trim(d);
  if (d.empty()) throw PoleError("polynomial division by zero");
  trim(num);
  const long dd = degree(d);
  QPoly q(num.size() > d.size() - 1 ? num.size() - d.size() + 1 : 1, Rational(0));
  const Rational lead_inv = d.back().inverse();
  for (long i = degree(num); i >= dd; --i) {
    const Rational c = num[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - dd)] = c;
    for (long j = 0; j <= dd; ++j)
      num[static_cast<std::size_t>(i - dd + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  trim(num);
  trim(q);
  return {q, num};
}

QPoly mul_poly(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> exact_div_monic(std::vector<mpz_class> num,
                                       const std::vector<mpz_class>& den) {
  const long dd = static_cast<long>(den.size()) - 1;
  const long dn = static_cast<long>(num.size()) - 1;
  std::vector<mpz_class> q(static_cast<std::size_t>(dn - dd + 1));
  for (long i = dn; i >= dd; --i) {
    const mpz_class c = num[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j)
      num[static_cast<std::size_t>(i - dd + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  for (const auto& c : num)
    if (c != 0) throw DomainError("cyclotomic polynomial division left a remainder");
  return q;
}

// Construct-on-first-use so callers may build cyclotomic values during their
// own static initialization.
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned long, std::vector<mpz_class>>& phi_cache() {
  static std::map<unsigned long, std::vector<mpz_class>> c;
  return c;
}

}  // namespace

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long m) {
  if (m == 0 || m > kMaxOrder)
    throw DomainError("cyclotomic order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  std::lock_guard<std::mutex> lock(phi_mutex());
  auto& cache = phi_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Build Phi_d for every divisor d of m in ascending order:
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
  std::vector<unsigned long> divisors;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  for (unsigned long d : divisors) {
    if (cache.count(d)) continue;
    std::vector<mpz_class> f(static_cast<std::size_t>(d) + 1);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    for (unsigned long e : divisors) {
      if (e >= d || d % e != 0) continue;
      f = exact_div_monic(std::move(f), cache.at(e));
    }
    cache.emplace(d, std::move(f));
  }
  return cache.at(m);
}

Cyclotomic Cyclotomic::from_coeffs(unsigned long m, std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  if (raw.size() < deg) raw.resize(deg, Rational(0));
  if (raw.size() > deg) raw = mod_monic(std::move(raw), phi);
  return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long m, long e) {
  if (m == 0) throw DomainError("root of unity needs a positive order");
  long r = e % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  unsigned long exp = static_cast<unsigned long>(r);
  const unsigned long g = std::gcd(exp == 0 ? m : exp, m);
  m /= g;
  exp /= g;
  if (m == 1) return Cyclotomic(Rational(1));
  if (m == 2) return Cyclotomic(Rational(-1));
  std::vector<Rational> raw(static_cast<std::size_t>(exp) + 1, Rational(0));
  raw[static_cast<std::size_t>(exp)] = Rational(1);
  return from_coeffs(m, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0].is_one(); }

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic value " + str() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted_to(unsigned long target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0)
    throw DomainError("promotion target order must be a multiple of the current order");
  const unsigned long s = target_order / order_;
  std::vector<Rational> raw((coeffs_.size() - 1) * s + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * s] = coeffs_[i];
  return from_coeffs(target_order, std::move(raw));
}

std::optional<Cyclotomic> Cyclotomic::restricted_to(unsigned long target_order) const {
  if (target_order == order_) return *this;
  if (order_ % target_order != 0)
    throw DomainError("restriction target order must divide the current order");
  const unsigned long cols = euler_phi(target_order);
  const unsigned long rows = static_cast<unsigned long>(coeffs_.size());
  // Solve: sum_j d_j * promote(zeta_target^j) = this, exactly.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (unsigned long j = 0; j < cols; ++j) {
    std::vector<Rational> basis_raw(static_cast<std::size_t>(j) + 1, Rational(0));
    basis_raw[j] = Rational(1);
    const Cyclotomic column =
        from_coeffs(target_order, std::move(basis_raw)).promoted_to(order_);
    for (unsigned long i = 0; i < rows; ++i) a[i][j] = column.coeffs()[i];
  }
  for (unsigned long i = 0; i < rows; ++i) a[i][cols] = coeffs_[i];

  std::vector<long> pivot_of_col(cols, -1);
  unsigned long rank = 0;
  for (unsigned long c = 0; c < cols && rank < rows; ++c) {
    unsigned long pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = a[rank][c].inverse();
    for (unsigned long j = c; j <= cols; ++j) a[rank][j] *= inv;
    for (unsigned long i = 0; i < rows; ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (unsigned long j = c; j <= cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  for (unsigned long i = rank; i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;  // value lies outside the subfield
  std::vector<Rational> sol(cols, Rational(0));
  for (unsigned long c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) sol[c] = a[static_cast<std::size_t>(pivot_of_col[c])][cols];
  return from_coeffs(target_order, std::move(sol));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const unsigned long m = std::lcm(order_, o.order_);
  Cyclotomic a = promoted_to(m);
  const Cyclotomic b = o.promoted_to(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const unsigned long m = std::lcm(order_, o.order_);
  const Cyclotomic a = promoted_to(m);
  const Cyclotomic b = o.promoted_to(m);
  QPoly prod = mul_poly(a.coeffs_, b.coeffs_);
  prod.resize(std::max<std::size_t>(prod.size(), a.coeffs_.size()), Rational(0));
  return *this = from_coeffs(m, std::move(prod));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned long m = std::lcm(a.order_, b.order_);
  return a.promoted_to(m).coeffs_ == b.promoted_to(m).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw PoleError("inverse of the zero cyclotomic value");
  if (is_rational()) return Cyclotomic(coeffs_[0].inverse());
  // Extended Euclid against Phi_m; Phi_m is irreducible over Q, so the gcd
  // with any nonzero residue is a nonzero constant.
  const auto& phi_int = cyclotomic_polynomial(order_);
  QPoly r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly t0{}, t1{Rational(1)};
  while (degree(r1) > 0) {
    auto [q, rem] = divmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly qt1 = mul_poly(q, t1);
    QPoly next = t0;
    next.resize(std::max(next.size(), qt1.size()), Rational(0));
    for (std::size_t i = 0; i < qt1.size(); ++i) next[i] -= qt1[i];
    t0 = std::move(t1);
    t1 = std::move(next);
  }
  if (r1.empty()) throw DomainError("cyclotomic inverse: unexpected common factor with Phi_m");
  const Rational scale = r1[0].inverse();
  for (auto& c : t1) c *= scale;
  t1.resize(std::max<std::size_t>(t1.size(), coeffs_.size()), Rational(0));
  return from_coeffs(order_, std::move(t1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e == 0) return Cyclotomic(Rational(1));
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  Cyclotomic acc(Rational(1));
  while (n > 0) {
    if (n & 1UL) acc *= base;
    n >>= 1UL;
    if (n > 0) base *= base;
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  std::vector<Rational> raw(order_, Rational(0));
  raw[0] = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) raw[order_ - i] += coeffs_[i];
  return from_coeffs(order_, std::move(raw));
}

std::pair<double, double> Cyclotomic::complex_embed(int precision_digits) const {
  if (precision_digits < 1 || precision_digits > 15)
    throw DomainError("complex_embed precision must lie in [1, 15] decimal digits");
  constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;
  long double re = 0.0L, im = 0.0L;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const long double c = coeffs_[i].to_long_double();
    const long double angle = kTwoPi * static_cast<long double>(i) / static_cast<long double>(order_);
    re += c * cosl(angle);
    im += c * sinl(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << "z" << order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

RootOfUnity::RootOfUnity(unsigned long m, long e) {
  if (m == 0) throw DomainError("root of unity needs a positive order");
  if (m > kMaxOrder)
    throw DomainError("root of unity order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  long r = e % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  unsigned long exp = static_cast<unsigned long>(r);
  const unsigned long g = std::gcd(exp == 0 ? m : exp, m);
  order_ = m / g;
  exponent_ = exp / g;
}

RootOfUnity RootOfUnity::pow(long e) const {
  // exponent_ < order_ <= kMaxOrder keeps this product well inside long range
  // for every exponent the CLI accepts.
  const long long raw = static_cast<long long>(exponent_) * static_cast<long long>(e);
  const long long m = static_cast<long long>(order_);
  long long r = raw % m;
  if (r < 0) r += m;
  return RootOfUnity(order_, static_cast<long>(r));
}

std::string RootOfUnity::str() const {
  return std::to_string(order_) + ":" + std::to_string(exponent_);
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("root of unity must be written m:e", 0);
  try {
    const unsigned long m = std::stoul(text.substr(0, colon));
    const long e = std::stol(text.substr(colon + 1));
    return RootOfUnity(m, e);
  } catch (const std::logic_error&) {
    throw ParseError("root of unity must be written m:e with integer m, e", 0);
  }
}

}  // namespace unigen
