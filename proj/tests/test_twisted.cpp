#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "unigen/errors.hpp"
#include "unigen/twisted.hpp"

using namespace unigen;

namespace {
Cyclotomic q(long n, long d = 1) { return Cyclotomic(Rational(mpz_class(n), mpz_class(d))); }
const UnifiedParams kBern(1, Rational(1), 1, q(1));
const UnifiedParams kBeta2K1(1, Rational(1), 1, q(2));
const UnifiedParams kBeta2K0(0, Rational(1), 1, q(2));
}  // namespace

TEST_CASE("twisted params") {
  const TwistedParams tp(kBeta2K1, RootOfUnity(2, 1), 1);
  CHECK(tp.ratio() == q(-2));
  CHECK(tp.regular());
  CHECK_FALSE(TwistedParams(kBern, RootOfUnity(1, 0), 1).regular());
  CHECK_THROWS_AS(TwistedParams(kBern, RootOfUnity(1, 0), 0), DomainError);
}

TEST_CASE("w = 1 collapses to the unified family") {
  for (const auto& p : {kBeta2K0, kBeta2K1, UnifiedParams(2, Rational(3), 2, q(1, 2))}) {
    const auto plain = unified_numbers(p, 8);
    const auto twisted = twisted_numbers(TwistedParams(p, RootOfUnity(1, 0), 1), 8);
    for (long n = 0; n <= 8; ++n)
      CHECK(twisted[static_cast<std::size_t>(n)] == plain[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("w = -1, k = 1 gives the Genocchi family up to -1/2") {
  const auto G = oracles::genocchi(12);
  CHECK(G[6] == Rational(-3));
  const TwistedParams tp(kBern, RootOfUnity(2, 1), 1);
  const auto y = twisted_numbers(tp, 12);
  for (long n = 0; n <= 12; ++n)
    CHECK(y[static_cast<std::size_t>(n)] ==
          Cyclotomic(-G[static_cast<std::size_t>(n)] / Rational(2)));
  // spec instance n <= 4: [0, -1/2, 1/2, 0, -1/2]
  CHECK(y[0].is_zero());
  CHECK(y[1] == q(-1, 2));
  CHECK(y[2] == q(1, 2));
  CHECK(y[3].is_zero());
  CHECK(y[4] == q(-1, 2));
}

TEST_CASE("w = zeta_3, k = 0 at n = 0") {
  const TwistedParams tp(UnifiedParams(0, Rational(1), 1, q(1)), RootOfUnity(3, 1), 1);
  const auto y = twisted_numbers(tp, 0);
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  CHECK(y[0] == q(2) * (z3.pow(2) - q(1)) * q(1, 3));
  CHECK(y[0] == q(2) * (z3 - q(1)).inverse());
}

TEST_CASE("pole for irregular twist with k = 0") {
  const TwistedParams tp(UnifiedParams(0, Rational(1), 1, q(1)), RootOfUnity(1, 0), 1);
  CHECK_THROWS_AS(twisted_numbers(tp, 2), PoleError);
  // w = -1, beta = -1 also lands on the pole: w beta^b = 1 = a^b
  const TwistedParams tm(UnifiedParams(0, Rational(1), 1, q(-1)), RootOfUnity(2, 1), 1);
  CHECK_THROWS_AS(twisted_numbers(tm, 2), PoleError);
}

TEST_CASE("multiple twisted values") {
  SUBCASE("h = 1 reduces to the twisted family") {
    const TwistedParams t1(kBeta2K1, RootOfUnity(2, 1), 1);
    const auto a = twisted_numbers(t1, 8);
    const auto b = multiple_twisted_polys(t1, Rational(0), 8);
    for (long n = 0; n <= 8; ++n)
      CHECK(a[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n)]);
  }
  SUBCASE("h = 2 squared-kernel example") {
    const TwistedParams t2(kBeta2K1, RootOfUnity(1, 0), 2);
    const auto y = multiple_twisted_polys(t2, Rational(0), 4);
    CHECK(y[0].is_zero());
    CHECK(y[1].is_zero());
    CHECK(y[2] == q(2));
    CHECK(y[3] == q(-24));
    CHECK(y[4] == q(240));
  }
  SUBCASE("h = 2 numbers are the binomial self-convolution of h = 1 numbers") {
    const TwistedParams t1(kBeta2K0, RootOfUnity(2, 1), 1);
    const TwistedParams t2(kBeta2K0, RootOfUnity(2, 1), 2);
    const auto y1 = twisted_numbers(t1, 8);
    const auto y2 = multiple_twisted_polys(t2, Rational(0), 8);
    for (long n = 0; n <= 8; ++n) {
      Cyclotomic conv;
      for (long j = 0; j <= n; ++j)
        conv += Cyclotomic(Rational(binomial(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(j)))) *
                y1[static_cast<std::size_t>(j)] * y1[static_cast<std::size_t>(n - j)];
      CHECK(y2[static_cast<std::size_t>(n)] == conv);
    }
  }
}

TEST_CASE("power law: the h series is the h-th power of the h=1 series") {
  const TwistedParams t1(kBeta2K1, RootOfUnity(3, 1), 1);
  const TwistedParams t3(kBeta2K1, RootOfUnity(3, 1), 3);
  const long T = 12;
  const auto base = multiple_twisted_series(t1, Rational(0), T);
  const auto cubed = multiple_twisted_series(t3, Rational(0), T);
  const auto manual = series_pow(base, 3);
  for (long p = cubed.valuation(); p <= std::min(cubed.known_through(), manual.known_through());
       ++p)
    CHECK(cubed.coeff(p) == manual.coeff(p));
}

TEST_CASE("twist normalization invariance") {
  // w and w * zeta_m^m are the same root; the constructor normalizes both
  CHECK(RootOfUnity(3, 1) == RootOfUnity(3, 4));
  CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
  const auto a = twisted_numbers(TwistedParams(kBeta2K1, RootOfUnity(3, 1), 1), 6);
  const auto b = twisted_numbers(TwistedParams(kBeta2K1, RootOfUnity(3, 4), 1), 6);
  for (long n = 0; n <= 6; ++n)
    CHECK(a[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n)]);
}

TEST_CASE("multinomial convolution (proof-consistent form)") {
  SUBCASE("h = 1 is trivially exact") {
    const auto r = verify_multinomial_convolution(TwistedParams(kBeta2K1, RootOfUnity(1, 0), 1), 8);
    CHECK(r.passed);
    REQUIRE(r.printed_form_agrees.has_value());
    CHECK(*r.printed_form_agrees);
  }
  SUBCASE("h = 2, w = 1, beta = 2, k = 1") {
    const auto r = verify_multinomial_convolution(TwistedParams(kBeta2K1, RootOfUnity(1, 0), 2), 6);
    CHECK(r.passed);
    REQUIRE(r.printed_form_agrees.has_value());
    CHECK_FALSE(*r.printed_form_agrees);  // printed y^{(h)} factors over-count
    CHECK(r.printed_form_first_disagreement >= 0);
  }
  SUBCASE("h = 3, w = -1, beta = 1, k = 1") {
    const auto r =
        verify_multinomial_convolution(TwistedParams(kBern, RootOfUnity(2, 1), 3), 5);
    CHECK(r.passed);
  }
  SUBCASE("irregular parameters are refused") {
    const auto r = verify_multinomial_convolution(TwistedParams(kBern, RootOfUnity(1, 0), 2), 4);
    CHECK(r.skipped);
  }
}

TEST_CASE("sum of powers (x-carrying convolution)") {
  SUBCASE("x = 0 reduces to the multinomial convolution") {
    const TwistedParams tp(kBeta2K1, RootOfUnity(1, 0), 2);
    const auto a = verify_sum_of_powers(tp, Rational(0), 6);
    const auto b = verify_multinomial_convolution(tp, 6);
    CHECK(a.passed == b.passed);
  }
  SUBCASE("h = 2, k = 1, beta = 2, x = 1") {
    CHECK(verify_sum_of_powers(TwistedParams(kBeta2K1, RootOfUnity(1, 0), 2), Rational(1), 5)
              .passed);
  }
  SUBCASE("h = 1 reduces to the e^{xt} binomial expansion") {
    CHECK(verify_sum_of_powers(TwistedParams(kBeta2K0, RootOfUnity(2, 1), 1), Rational(2, 3), 8)
              .passed);
  }
  SUBCASE("twisted cyclotomic point") {
    const TwistedParams tp(UnifiedParams(1, Rational(2), 1, q(1, 2)), RootOfUnity(3, 1), 2);
    CHECK(verify_sum_of_powers(tp, Rational(1, 2), 5).passed);
  }
}
