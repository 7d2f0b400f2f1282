#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "unigen/unified.hpp"
#include "unigen/verify.hpp"
#include "unigen/zeta.hpp"

namespace unigen::output {

using ojson = nlohmann::ordered_json;

// All numerics are emitted as canonical strings so identical runs are
// byte-identical and CSV/JSON carry the same content.
std::string format_double(double d);
std::string format_complex(const std::complex<double>& z);

ojson cyclo_to_json(const Cyclotomic& z);
// Real-aware decimal string of the complex embedding: exactly-real values
// (fixed by conjugation) print without an imaginary part.
std::string approx_string(const Cyclotomic& z);

ojson report_to_json(const VerificationReport& r);
std::string report_to_csv_row(const VerificationReport& r);
inline const char* report_csv_header() {
  return "identity,params,status,checked,first_failure_n,lhs,rhs,printed_form";
}

ojson interpolation_to_json(const InterpolationReport& r);

}  // namespace unigen::output
