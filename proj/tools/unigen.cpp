// Command-line front end: exact computation of the unified twisted
// Euler/Genocchi families and mechanical verification of their identities.
// Emits JSON (default) or CSV on stdout; diagnostics as single machine
// parsable lines on stderr. Exit codes: 0 success / all checks passed,
// 1 exact verification failure, 2 parse error, 3 pole or singular operator,
// 4 convergence precondition, 5 numeric tolerance failure.

#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unigen/charfile.hpp"
#include "unigen/errors.hpp"
#include "unigen/gridverify.hpp"
#include "unigen/output.hpp"
#include "unigen/padic.hpp"
#include "unigen/twisted.hpp"
#include "unigen/valueexpr.hpp"
#include "unigen/zeta.hpp"

namespace {

using unigen::output::ojson;

struct CommonFlags {
  long k = 0;
  std::string a = "1";
  long b = 1;
  std::string beta = "2";
  std::string w = "1:0";
  long h = 1;
  std::string x = "0";
  long n_max = 10;
  long d = 1;
  std::string char_file;
  long p = 3;
  long depth = 5;
  std::string r = "1";
  std::string mode = "paper";
  long n = 0;
  double s_re = 0.0;
  double s_im = 0.0;
  long terms = 200;
  double tol = 1e-9;
  std::string format = "json";
  bool strict_paper = false;
  std::optional<long> trunc;
};

// frees the -h short flag so --h can mean the kernel multiplicity
void keep_long_help_only(CLI::App* cmd) { cmd->set_help_flag("--help", "print this help and exit"); }

void add_family_flags(CLI::App* cmd, CommonFlags& f, bool with_twist, bool with_x) {
  keep_long_help_only(cmd);
  cmd->add_option("--k", f.k, "prefactor exponent k >= 0")->capture_default_str();
  cmd->add_option("--a", f.a, "positive rational a, e.g. 2 or 3/2")->capture_default_str();
  cmd->add_option("--b", f.b, "positive integer b")->capture_default_str();
  cmd->add_option("--beta", f.beta, "nonzero value expression, e.g. 2, 1/2, zeta(3,1), 1/2*zeta(4,1)")
      ->capture_default_str();
  if (with_twist) {
    cmd->add_option("--w", f.w, "twist root of unity written m:e")->capture_default_str();
  }
  if (with_x) cmd->add_option("--x", f.x, "rational argument x")->capture_default_str();
  cmd->add_option("--n-max", f.n_max, "largest index n")->capture_default_str();
  auto* trunc = cmd->add_option("--trunc", "truncation order override");
  trunc->each([&f](const std::string& v) { f.trunc = std::stol(v); });
}

void add_format_flag(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

unigen::UnifiedParams make_params(const CommonFlags& f) {
  const unigen::Rational a = unigen::Rational::parse(f.a);
  const unigen::Cyclotomic beta = unigen::parse_value_expr(f.beta).value();
  return unigen::UnifiedParams(f.k, a, f.b, beta);
}

unigen::TwistedParams make_twisted(const CommonFlags& f) {
  return unigen::TwistedParams(make_params(f), unigen::RootOfUnity::parse(f.w), f.h);
}

ojson params_echo(const std::string& subcommand, const CommonFlags& f,
                  std::initializer_list<const char*> keys) {
  ojson j{{"subcommand", subcommand}};
  for (const char* key : keys) {
    const std::string k = key;
    if (k == "k") j["k"] = f.k;
    if (k == "a") j["a"] = unigen::Rational::parse(f.a).str();
    if (k == "b") j["b"] = f.b;
    if (k == "beta") j["beta"] = unigen::parse_value_expr(f.beta).str();
    if (k == "w") j["w"] = unigen::RootOfUnity::parse(f.w).str();
    if (k == "h") j["h"] = f.h;
    if (k == "x") j["x"] = unigen::Rational::parse(f.x).str();
    if (k == "n_max") j["n_max"] = f.n_max;
    if (k == "d") j["d"] = f.d;
    if (k == "char_file") j["char_file"] = f.char_file;
    if (k == "p") j["p"] = f.p;
    if (k == "depth") j["depth"] = f.depth;
    if (k == "r") j["r"] = f.r;
    if (k == "mode") j["mode"] = f.mode;
    if (k == "n") j["n"] = f.n;
    if (k == "s") j["s"] = unigen::output::format_complex({f.s_re, f.s_im});
    if (k == "terms") j["terms"] = f.terms;
    if (k == "tol") j["tol"] = unigen::output::format_double(f.tol);
    if (k == "strict_paper") j["strict_paper"] = f.strict_paper;
    if (k == "trunc") {
      if (f.trunc)
        j["trunc"] = *f.trunc;
      else
        j["trunc"] = nullptr;
    }
  }
  return j;
}

void emit_params_csv(std::ostream& os, const ojson& params) {
  for (const auto& [key, value] : params.items()) {
    os << "# " << key << "=";
    if (value.is_string())
      os << value.get<std::string>();
    else if (value.is_null())
      os << "default";
    else
      os << value.dump();
    os << "\n";
  }
}

int emit_value_rows(const CommonFlags& f, const ojson& params,
                    const std::vector<unigen::Cyclotomic>& values) {
  if (f.format == "json") {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back(ojson{{"n", i},
                           {"value", unigen::output::cyclo_to_json(values[i])},
                           {"approx", unigen::output::approx_string(values[i])}});
    std::cout << ojson{{"params", params}, {"results", rows}}.dump(2) << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << "n,value,approx\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << i << "," << values[i].str() << "," << unigen::output::approx_string(values[i])
                << "\n";
  }
  return 0;
}

int emit_report(const CommonFlags& f, const ojson& params, const unigen::VerificationReport& r) {
  if (f.format == "json") {
    std::cout << ojson{{"params", params}, {"report", unigen::output::report_to_json(r)}}.dump(2)
              << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << unigen::output::report_csv_header() << "\n"
              << unigen::output::report_to_csv_row(r) << "\n";
  }
  if (r.skipped) {
    std::cerr << "error kind=pole code=3: verification skipped: " << r.skip_reason << "\n";
    return 3;
  }
  return r.passed ? 0 : 1;
}

int run_numbers(const CommonFlags& f) {
  const auto params = params_echo("numbers", f, {"k", "a", "b", "beta", "n_max", "trunc"});
  return emit_value_rows(f, params, unigen::unified_numbers(make_params(f), f.n_max, f.trunc));
}

int run_poly(const CommonFlags& f) {
  const auto params = params_echo("poly", f, {"k", "a", "b", "beta", "x", "n_max", "trunc"});
  const auto p = make_params(f);
  const auto polys = unigen::unified_polynomials(p, f.n_max, f.trunc);
  const unigen::Rational x = unigen::Rational::parse(f.x);
  if (f.format == "json") {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const unigen::Cyclotomic at_x = polys[i].evaluate(x);
      ojson coeffs = ojson::array();
      for (const auto& c : polys[i].coeffs()) coeffs.push_back(unigen::output::cyclo_to_json(c));
      rows.push_back(ojson{{"n", i},
                           {"value", unigen::output::cyclo_to_json(at_x)},
                           {"approx", unigen::output::approx_string(at_x)},
                           {"poly", coeffs}});
    }
    std::cout << ojson{{"params", params}, {"results", rows}}.dump(2) << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << "n,value,approx,poly\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const unigen::Cyclotomic at_x = polys[i].evaluate(x);
      std::cout << i << "," << at_x.str() << "," << unigen::output::approx_string(at_x) << ","
                << polys[i].str() << "\n";
    }
  }
  return 0;
}

int run_char(const CommonFlags& f) {
  if (f.char_file.empty())
    throw unigen::ParseError("char requires --char-file with a character table");
  const auto chi = unigen::load_character_file(f.char_file);
  auto params = params_echo("char", f, {"k", "a", "b", "beta", "x", "n_max", "char_file", "trunc"});
  params["char"] = chi.str();
  const unigen::Rational x = unigen::Rational::parse(f.x);
  const auto values = x.is_zero()
                          ? unigen::char_numbers(chi, make_params(f), f.n_max, f.trunc)
                          : unigen::char_poly_values(chi, make_params(f), x, f.n_max, f.trunc);
  return emit_value_rows(f, params, values);
}

int run_twisted(const CommonFlags& f) {
  const auto params = params_echo("twisted", f, {"k", "a", "b", "beta", "w", "n_max", "trunc"});
  const unigen::TwistedParams tp(make_params(f), unigen::RootOfUnity::parse(f.w), 1);
  return emit_value_rows(f, params, unigen::twisted_numbers(tp, f.n_max, f.trunc));
}

int run_multi(const CommonFlags& f) {
  const auto params =
      params_echo("multi", f, {"k", "a", "b", "beta", "w", "h", "x", "n_max", "trunc"});
  return emit_value_rows(
      f, params,
      unigen::multiple_twisted_polys(make_twisted(f), unigen::Rational::parse(f.x), f.n_max,
                                     f.trunc));
}

int run_zeta(const CommonFlags& f) {
  const auto params =
      params_echo("zeta", f, {"k", "a", "b", "beta", "w", "h", "s", "terms", "strict_paper"});
  unigen::ZetaQuery q{{f.s_re, f.s_im}, make_twisted(f), f.terms, 15, f.strict_paper};
  const unigen::ZetaResult z = unigen::zeta_eval(q);
  if (f.format == "json") {
    ojson row{{"s", unigen::output::format_complex(q.s)},
              {"value", unigen::output::format_complex(z.value)},
              {"tail_bound", unigen::output::format_double(z.tail_bound)},
              {"terms_used", z.terms_used}};
    std::cout << ojson{{"params", params}, {"results", ojson::array({row})}}.dump(2) << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << "s,value,tail_bound,terms_used\n"
              << unigen::output::format_complex(q.s) << ","
              << unigen::output::format_complex(z.value) << ","
              << unigen::output::format_double(z.tail_bound) << "," << z.terms_used << "\n";
  }
  return 0;
}

int run_padic_moments(const CommonFlags& f) {
  const auto params = params_echo("padic moments", f, {"r", "mode", "n_max"});
  const unigen::Cyclotomic r = unigen::parse_value_expr(f.r).value();
  const auto table = f.mode == "paper" ? unigen::paper_operator_moments(r, f.n_max)
                                       : unigen::standard_fermionic_moments(r, f.n_max);
  if (f.format == "json") {
    ojson rows = ojson::array();
    for (long n = 0; n <= table.n_max(); ++n) {
      const auto& m = table.moments()[static_cast<std::size_t>(n)];
      rows.push_back(ojson{{"n", n},
                           {"value", unigen::output::cyclo_to_json(m)},
                           {"approx", unigen::output::approx_string(m)}});
    }
    std::cout << ojson{{"params", params},
                       {"results", rows},
                       {"invariant_holds", table.invariant_holds()}}
                     .dump(2)
              << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << "n,value,approx\n";
    for (long n = 0; n <= table.n_max(); ++n) {
      const auto& m = table.moments()[static_cast<std::size_t>(n)];
      std::cout << n << "," << m.str() << "," << unigen::output::approx_string(m) << "\n";
    }
  }
  return 0;
}

int run_padic_sums(const CommonFlags& f) {
  const auto params = params_echo("padic sums", f, {"p", "depth", "r", "n"});
  const unigen::Rational r = unigen::Rational::parse(f.r);
  const auto trace =
      unigen::fermionic_partial_sums(static_cast<unsigned long>(f.p), f.depth, r, f.n);
  if (f.format == "json") {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < trace.sums.size(); ++i)
      rows.push_back(ojson{{"N", i + 1},
                           {"sum", trace.sums[i].str()},
                           {"valuation", trace.valuations[i].str()}});
    std::cout << ojson{{"params", params},
                       {"results", rows},
                       {"limit", trace.limit.str()},
                       {"convergence_constant", trace.convergence_constant},
                       {"monotone", trace.monotone}}
                     .dump(2)
              << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << "N,sum,valuation\n";
    for (std::size_t i = 0; i < trace.sums.size(); ++i)
      std::cout << i + 1 << "," << trace.sums[i].str() << "," << trace.valuations[i].str() << "\n";
    std::cout << "# limit=" << trace.limit.str()
              << "\n# convergence_constant=" << trace.convergence_constant
              << "\n# monotone=" << (trace.monotone ? "true" : "false") << "\n";
  }
  return 0;
}

int run_verify_single(const std::string& which, const CommonFlags& f) {
  if (which == "symmetry") {
    const auto params = params_echo("verify symmetry", f, {"k", "a", "b", "beta", "x", "n_max"});
    return emit_report(f, params,
                       unigen::verify_symmetry(make_params(f), unigen::Rational::parse(f.x), f.n_max));
  }
  if (which == "distribution") {
    const auto params =
        params_echo("verify distribution", f, {"k", "a", "b", "beta", "d", "x", "n_max"});
    return emit_report(f, params,
                       unigen::verify_distribution(make_params(f), static_cast<unsigned long>(f.d),
                                                   unigen::Rational::parse(f.x), f.n_max));
  }
  if (which == "binomial") {
    const auto params = params_echo("verify binomial", f, {"k", "a", "b", "beta", "x", "n_max"});
    return emit_report(f, params,
                       unigen::verify_binomial_convolution(make_params(f),
                                                           unigen::Rational::parse(f.x), f.n_max));
  }
  if (which == "char-dist") {
    if (f.char_file.empty())
      throw unigen::ParseError("verify char-dist requires --char-file with a character table");
    const auto chi = unigen::load_character_file(f.char_file);
    auto params =
        params_echo("verify char-dist", f, {"k", "a", "b", "beta", "x", "n_max", "char_file"});
    params["char"] = chi.str();
    return emit_report(f, params,
                       unigen::verify_char_distribution(chi, make_params(f),
                                                        unigen::Rational::parse(f.x), f.n_max));
  }
  if (which == "multinomial") {
    const auto params =
        params_echo("verify multinomial", f, {"k", "a", "b", "beta", "w", "h", "n_max"});
    return emit_report(f, params, unigen::verify_multinomial_convolution(make_twisted(f), f.n_max));
  }
  if (which == "sum-powers") {
    const auto params =
        params_echo("verify sum-powers", f, {"k", "a", "b", "beta", "w", "h", "x", "n_max"});
    return emit_report(f, params,
                       unigen::verify_sum_of_powers(make_twisted(f), unigen::Rational::parse(f.x),
                                                    f.n_max));
  }
  if (which == "witt") {
    const auto params =
        params_echo("verify witt", f, {"k", "a", "b", "beta", "w", "h", "x", "n_max"});
    return emit_report(f, params,
                       unigen::witt_cross_check(make_twisted(f), unigen::Rational::parse(f.x),
                                                f.n_max));
  }
  if (which == "funceq") {
    const auto params = params_echo("verify funceq", f, {"r", "n_max"});
    const unigen::Cyclotomic r = unigen::parse_value_expr(f.r).value();
    std::vector<long> degrees;
    for (long m = 0; m <= f.n_max; ++m) degrees.push_back(m);
    return emit_report(f, params, unigen::verify_functional_equation(r, degrees, {1, 2, 3}));
  }
  if (which == "zeta-interp") {
    const auto params = params_echo("verify zeta-interp", f,
                                    {"k", "a", "b", "beta", "w", "h", "n_max", "terms", "tol",
                                     "strict_paper"});
    const auto report = unigen::interpolation_check(make_twisted(f), 0, std::max<long>(f.n_max, 1),
                                                    f.terms, f.tol, f.strict_paper);
    if (f.format == "json") {
      std::cout << ojson{{"params", params},
                         {"report", unigen::output::interpolation_to_json(report)}}
                       .dump(2)
                << "\n";
    } else {
      emit_params_csv(std::cout, params);
      std::cout << "n,zeta,exact,abs_difference,tail_bound,tolerance_used,passed,correction\n";
      for (const auto& row : report.rows)
        std::cout << row.n << "," << unigen::output::format_complex(row.zeta_value) << ","
                  << unigen::output::format_complex(row.exact_embedded) << ","
                  << unigen::output::format_double(row.abs_difference) << ","
                  << unigen::output::format_double(row.tail_bound) << ","
                  << unigen::output::format_double(row.tolerance_used) << ","
                  << (row.passed ? "true" : "false") << ","
                  << (row.corrected ? unigen::output::format_double(row.correction) : "-") << "\n";
    }
    if (!report.passed) {
      std::cerr << "error kind=tolerance code=5: zeta interpolation exceeded tolerance\n";
      return 5;
    }
    return 0;
  }
  throw unigen::ParseError("unknown verify target '" + which + "'");
}

int run_verify_all(const CommonFlags& f) {
  unigen::GridConfig config;
  config.n_max = f.n_max;
  config.zeta_terms = f.terms;
  config.zeta_tol = f.tol;
  config.strict_paper = f.strict_paper;
  unigen::GridSummary summary;
  const auto reports = unigen::run_verification_grid(config, summary);
  auto params = params_echo("verify all", f, {"n_max", "terms", "tol", "strict_paper"});
  if (f.format == "json") {
    ojson rows = ojson::array();
    for (const auto& r : reports) rows.push_back(unigen::output::report_to_json(r));
    std::cout << ojson{{"params", params},
                       {"reports", rows},
                       {"summary", ojson{{"pass", summary.passed},
                                         {"fail", summary.failed},
                                         {"skip", summary.skipped}}}}
                     .dump(2)
              << "\n";
  } else {
    emit_params_csv(std::cout, params);
    std::cout << unigen::output::report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << unigen::output::report_to_csv_row(r) << "\n";
    std::cout << "# summary pass=" << summary.passed << " fail=" << summary.failed
              << " skip=" << summary.skipped << "\n";
  }
  if (summary.failed > 0) {
    std::cerr << "error kind=verification code=1: " << summary.failed
              << " grid verification(s) failed\n";
    return 1;
  }
  return 0;
}

const char* kind_name(unigen::ErrorKind k) {
  switch (k) {
    case unigen::ErrorKind::Parse: return "parse";
    case unigen::ErrorKind::Pole: return "pole";
    case unigen::ErrorKind::Convergence: return "convergence";
    case unigen::ErrorKind::Tolerance: return "tolerance";
    default: return "domain";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unified twisted Euler/Genocchi family calculator and identity verifier"};
  keep_long_help_only(&app);
  app.require_subcommand(1);
  CommonFlags f;

  auto* numbers = app.add_subcommand("numbers", "unified numbers y_n(k,a,b)");
  add_family_flags(numbers, f, false, false);
  add_format_flag(numbers, f);

  auto* poly = app.add_subcommand("poly", "unified polynomials y_n(x:k,a,b)");
  add_family_flags(poly, f, false, true);
  add_format_flag(poly, f);

  auto* chr = app.add_subcommand("char", "character family y_{n,chi}(k,a,b)");
  add_family_flags(chr, f, false, true);
  chr->add_option("--char-file", f.char_file, "character table file");
  add_format_flag(chr, f);

  auto* twisted = app.add_subcommand("twisted", "twisted numbers y_{n,w}(k,a,b)");
  add_family_flags(twisted, f, true, false);
  add_format_flag(twisted, f);

  auto* multi = app.add_subcommand("multi", "multiple twisted values y^(h)_n(x:k,a,b)");
  add_family_flags(multi, f, true, true);
  multi->add_option("--h", f.h, "kernel power h >= 1")->capture_default_str();
  add_format_flag(multi, f);

  auto* zeta = app.add_subcommand("zeta", "numeric multiple twisted zeta value");
  add_family_flags(zeta, f, true, false);
  zeta->add_option("--h", f.h, "kernel power h >= 1")->capture_default_str();
  zeta->add_option("--s-re", f.s_re, "Re(s)")->capture_default_str();
  zeta->add_option("--s-im", f.s_im, "Im(s)")->capture_default_str();
  zeta->add_option("--terms", f.terms, "summation terms M")->capture_default_str();
  zeta->add_flag("--strict-paper", f.strict_paper, "drop the a^{-bh} normalization");
  add_format_flag(zeta, f);

  auto* padic = app.add_subcommand("padic", "fermionic integral machinery");
  keep_long_help_only(padic);
  padic->require_subcommand(1);
  auto* moments = padic->add_subcommand("moments", "functional-equation moment table");
  keep_long_help_only(moments);
  moments->add_option("--r", f.r, "ratio value expression")->capture_default_str();
  moments->add_option("--mode", f.mode, "paper | standard")
      ->check(CLI::IsMember({"paper", "standard"}))
      ->capture_default_str();
  moments->add_option("--n-max", f.n_max, "largest moment degree")->capture_default_str();
  add_format_flag(moments, f);
  auto* sums = padic->add_subcommand("sums", "literal truncated alternating sums with valuations");
  keep_long_help_only(sums);
  sums->add_option("--p", f.p, "odd prime p")->capture_default_str();
  sums->add_option("--depth", f.depth, "largest depth N")->capture_default_str();
  sums->add_option("--r", f.r, "rational ratio with vp(r-1) >= 1")->capture_default_str();
  sums->add_option("--n", f.n, "moment degree n")->capture_default_str();
  add_format_flag(sums, f);

  auto* verify = app.add_subcommand("verify", "identity verification");
  keep_long_help_only(verify);
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> verify_subs;
  for (const char* name : {"symmetry", "distribution", "binomial", "char-dist", "multinomial",
                           "sum-powers", "witt", "funceq", "zeta-interp", "all"}) {
    auto* sub = verify->add_subcommand(name, std::string("verify ") + name);
    add_family_flags(sub, f, true, true);
    sub->add_option("--h", f.h, "kernel power h >= 1")->capture_default_str();
    sub->add_option("--d", f.d, "distribution modulus d >= 1")->capture_default_str();
    sub->add_option("--char-file", f.char_file, "character table file");
    sub->add_option("--r", f.r, "ratio value expression (funceq)")->capture_default_str();
    sub->add_option("--terms", f.terms, "zeta summation terms")->capture_default_str();
    sub->add_option("--tol", f.tol, "zeta tolerance")->capture_default_str();
    sub->add_flag("--strict-paper", f.strict_paper, "drop the a^{-bh} normalization");
    add_format_flag(sub, f);
    verify_subs.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error kind=parse code=2: " << e.what() << "\n";
    return 2;
  }

  try {
    if (numbers->parsed()) return run_numbers(f);
    if (poly->parsed()) return run_poly(f);
    if (chr->parsed()) return run_char(f);
    if (twisted->parsed()) return run_twisted(f);
    if (multi->parsed()) return run_multi(f);
    if (zeta->parsed()) return run_zeta(f);
    if (padic->parsed()) {
      if (moments->parsed()) return run_padic_moments(f);
      return run_padic_sums(f);
    }
    if (verify->parsed()) {
      for (const auto& [name, sub] : verify_subs) {
        if (!sub->parsed()) continue;
        if (name == "all") return run_verify_all(f);
        return run_verify_single(name, f);
      }
    }
  } catch (const unigen::Error& e) {
    std::cerr << "error kind=" << kind_name(e.kind()) << " code=" << e.exit_code() << ": "
              << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error kind=internal code=1: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
