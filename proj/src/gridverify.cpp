#include "unigen/gridverify.hpp"

#include <algorithm>
#include <sstream>

#include "unigen/errors.hpp"
#include "unigen/output.hpp"
#include "unigen/padic.hpp"
#include "unigen/twisted.hpp"
#include "unigen/zeta.hpp"

namespace unigen {

namespace {

struct GridAxes {
  std::vector<long> ks{0, 1, 2};
  std::vector<long> bs{1, 2};
  std::vector<Rational> as{Rational(1), Rational(2)};
  std::vector<std::pair<std::string, Cyclotomic>> betas{
      {"2", Cyclotomic(Rational(2))},
      {"1/2", Cyclotomic(Rational(1, 2))},
      {"zeta3", Cyclotomic::root_of_unity(3, 1)},
      {"-1", Cyclotomic(Rational(-1))},
  };
  std::vector<RootOfUnity> ws{RootOfUnity(1, 0), RootOfUnity(2, 1), RootOfUnity(3, 1)};
  std::vector<long> hs{1, 2, 3};
  std::vector<unsigned long> ds{1, 2, 3};
  std::vector<Rational> xs{Rational(0), Rational(1, 2)};
};

const Cyclotomic kOne{Rational(1)};

bool wants(const GridConfig& c, const std::string& name) {
  if (c.identities.empty()) return true;
  return std::find(c.identities.begin(), c.identities.end(), name) != c.identities.end();
}

std::vector<DirichletCharacter> grid_characters() {
  std::vector<DirichletCharacter> chis;
  chis.push_back(DirichletCharacter::principal(1));
  chis.push_back(DirichletCharacter::principal(2));
  chis.push_back(DirichletCharacter::principal(3));
  // quadratic character mod 3: chi(2) = -1
  chis.push_back(DirichletCharacter(3, 2, {std::nullopt, 0UL, 1UL}));
  return chis;
}

void tally(GridSummary& s, const VerificationReport& r) {
  if (r.skipped)
    ++s.skipped;
  else if (r.passed)
    ++s.passed;
  else
    ++s.failed;
}

}  // namespace

const std::vector<std::string>& grid_identity_names() {
  static const std::vector<std::string> names{
      "symmetry",   "distribution", "binomial", "char-dist", "multinomial",
      "sum-powers", "witt",         "funceq",   "zeta-interp"};
  return names;
}

std::vector<VerificationReport> run_verification_grid(const GridConfig& config,
                                                      GridSummary& summary) {
  const GridAxes axes;
  std::vector<VerificationReport> reports;
  const long n_max = config.n_max;

  auto each_base = [&](auto&& fn) {
    for (long k : axes.ks)
      for (const Rational& a : axes.as)
        for (long b : axes.bs)
          for (const auto& [beta_name, beta] : axes.betas) fn(UnifiedParams(k, a, b, beta));
  };

  if (wants(config, "symmetry")) {
    each_base([&](const UnifiedParams& p) {
      for (const Rational& x : axes.xs) {
        if (!p.regular() && p.k() == 0) {
          tally(summary, reports.emplace_back(VerificationReport::skip(
                             "symmetry", p.str() + " x=" + x.str(),
                             "pole: k = 0 with (beta/a)^b = 1")));
          continue;
        }
        tally(summary, reports.emplace_back(verify_symmetry(p, x, n_max)));
      }
    });
  }

  if (wants(config, "distribution")) {
    each_base([&](const UnifiedParams& p) {
      for (unsigned long d : axes.ds) {
        for (const Rational& x : axes.xs) {
          const bool dpow_regular =
              !(p.ratio_pow_b().pow(static_cast<long>(d)) == kOne);
          if (p.k() == 0 && (!p.regular() || !dpow_regular)) {
            tally(summary,
                  reports.emplace_back(VerificationReport::skip(
                      "distribution",
                      p.str() + " d=" + std::to_string(d) + " x=" + x.str(),
                      "pole: k = 0 with (beta/a)^b = 1 or (beta/a)^{bd} = 1")));
            continue;
          }
          tally(summary, reports.emplace_back(verify_distribution(p, d, x, n_max)));
        }
      }
    });
  }

  if (wants(config, "binomial")) {
    each_base([&](const UnifiedParams& p) {
      for (const Rational& x : axes.xs)
        tally(summary, reports.emplace_back(verify_binomial_convolution(p, x, n_max)));
    });
  }

  if (wants(config, "char-dist")) {
    const auto chis = grid_characters();
    each_base([&](const UnifiedParams& p) {
      for (const auto& chi : chis) {
        for (const Rational& x : axes.xs) {
          const bool dpow_regular =
              !(p.ratio_pow_b().pow(static_cast<long>(chi.modulus())) == kOne);
          if (p.k() == 0 && !dpow_regular) {
            tally(summary, reports.emplace_back(VerificationReport::skip(
                               "char-dist", p.str() + " x=" + x.str() + " " + chi.str(),
                               "pole: k = 0 with (beta/a)^{bd} = 1")));
            continue;
          }
          tally(summary, reports.emplace_back(verify_char_distribution(chi, p, x, n_max)));
        }
      }
    });
  }

  const bool want_multinomial = wants(config, "multinomial");
  const bool want_sum_powers = wants(config, "sum-powers");
  const bool want_witt = wants(config, "witt");
  if (want_multinomial || want_sum_powers || want_witt) {
    each_base([&](const UnifiedParams& p) {
      for (const RootOfUnity& w : axes.ws) {
        for (long h : axes.hs) {
          const TwistedParams tp(p, w, h);
          if (want_multinomial)
            tally(summary, reports.emplace_back(verify_multinomial_convolution(tp, n_max)));
          if (want_sum_powers)
            for (const Rational& x : {Rational(0), Rational(1)})
              tally(summary, reports.emplace_back(verify_sum_of_powers(tp, x, n_max)));
          if (want_witt) {
            for (const Rational& x : axes.xs) {
              if (!tp.regular()) {
                tally(summary, reports.emplace_back(VerificationReport::skip(
                                   "witt", tp.str() + " x=" + x.str(),
                                   "singular operator: w*(beta/a)^b = 1 has no moment table")));
                continue;
              }
              tally(summary, reports.emplace_back(witt_cross_check(tp, x, n_max)));
            }
          }
        }
      }
    });
  }

  if (wants(config, "funceq")) {
    std::vector<Cyclotomic> ratios;
    each_base([&](const UnifiedParams& p) {
      for (const RootOfUnity& w : axes.ws) {
        const Cyclotomic r = w.value() * p.ratio_pow_b();
        if (std::none_of(ratios.begin(), ratios.end(),
                         [&](const Cyclotomic& seen) { return seen == r; }))
          ratios.push_back(r);
      }
    });
    const std::vector<long> degrees{0, 1, 2, 3, 4, 5, 6};
    const std::vector<long> shifts{1, 2, 3};
    for (const Cyclotomic& r : ratios)
      tally(summary, reports.emplace_back(verify_functional_equation(r, degrees, shifts)));
  }

  if (wants(config, "zeta-interp")) {
    each_base([&](const UnifiedParams& p) {
      for (const RootOfUnity& w : axes.ws) {
        for (long h : axes.hs) {
          const TwistedParams tp(p, w, h);
          const Cyclotomic abs_sq = tp.ratio() * tp.ratio().conj();
          bool divergent = abs_sq == kOne;
          if (!divergent) {
            const auto [re, im] = tp.ratio().complex_embed(15);
            divergent = re * re + im * im >= 1.0;
          }
          if (divergent) {
            tally(summary, reports.emplace_back(VerificationReport::skip(
                               "zeta-interp", tp.str(), "divergent: |w*(beta/a)^b| >= 1")));
            continue;
          }
          const InterpolationReport ir =
              interpolation_check(tp, 0, 6, config.zeta_terms, config.zeta_tol,
                                  config.strict_paper);
          VerificationReport r;
          r.identity = "zeta-interp";
          r.params = ir.params;
          r.passed = ir.passed;
          r.checked = static_cast<long>(ir.rows.size());
          for (const auto& row : ir.rows) {
            if (!row.passed && r.first_failure_n < 0) {
              r.first_failure_n = row.n;
              r.lhs = output::format_complex(row.zeta_value);
              r.rhs = output::format_complex(row.exact_embedded);
            }
          }
          double max_diff = 0;
          for (const auto& row : ir.rows) max_diff = std::max(max_diff, row.abs_difference);
          r.notes.push_back("max |zeta(-n) - exact| = " + output::format_double(max_diff));
          for (const auto& note : ir.notes) r.notes.push_back(note);
          tally(summary, reports.emplace_back(std::move(r)));
        }
      }
    });
  }

  return reports;
}

}  // namespace unigen
