#include "unigen/output.hpp"

#include <cstdio>

namespace unigen::output {

std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

std::string format_complex(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

ojson cyclo_to_json(const Cyclotomic& z) {
  ojson coeffs = ojson::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.str());
  return ojson{{"order", z.order()}, {"coeffs", coeffs}};
}

std::string approx_string(const Cyclotomic& z) {
  const auto [re, im] = z.complex_embed(15);
  if (z.conj() == z) return format_double(re);  // exactly real
  return format_complex({re, im});
}

ojson report_to_json(const VerificationReport& r) {
  ojson j{{"identity", r.identity}, {"params", r.params}, {"status", r.status()},
          {"checked", r.checked}};
  if (r.skipped)
    j["skip_reason"] = r.skip_reason;
  else if (!r.passed)
    j["first_failure"] = ojson{{"n", r.first_failure_n}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  else
    j["first_failure"] = nullptr;
  if (r.printed_form_agrees.has_value()) {
    j["printed_form_agrees"] = *r.printed_form_agrees;
    if (!*r.printed_form_agrees)
      j["printed_form_first_disagreement"] = r.printed_form_first_disagreement;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_to_csv_row(const VerificationReport& r) {
  std::string printed = "-";
  if (r.printed_form_agrees.has_value()) printed = *r.printed_form_agrees ? "agrees" : "disagrees";
  std::string row = r.identity + "," + r.params + "," + r.status() + "," +
                    std::to_string(r.checked) + ",";
  row += (r.passed || r.skipped) ? "-" : std::to_string(r.first_failure_n);
  row += ",";
  row += (r.passed || r.skipped) ? "-" : r.lhs;
  row += ",";
  row += (r.passed || r.skipped) ? "-" : r.rhs;
  row += "," + printed;
  return row;
}

ojson interpolation_to_json(const InterpolationReport& r) {
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson jr{{"n", row.n},
             {"zeta", format_complex(row.zeta_value)},
             {"exact", format_complex(row.exact_embedded)},
             {"abs_difference", format_double(row.abs_difference)},
             {"tail_bound", format_double(row.tail_bound)},
             {"tolerance_used", format_double(row.tolerance_used)},
             {"passed", row.passed}};
    if (row.corrected) jr["excluded_term_correction"] = format_double(row.correction);
    rows.push_back(jr);
  }
  ojson j{{"identity", "zeta-interpolation"},
          {"params", r.params},
          {"status", r.passed ? "pass" : "fail"},
          {"rows", rows}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace unigen::output
