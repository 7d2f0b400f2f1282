#pragma once

#include <string>
#include <vector>

#include "unigen/verify.hpp"

namespace unigen {

// Driver for the default verification grid:
//   k in {0,1,2}, b in {1,2}, a in {1,2}, beta in {2, 1/2, zeta_3, -1},
//   w in {1, -1, zeta_3}, h in {1,2,3}, d in {1,2,3},
// skipping (and reporting) points that violate preconditions.
struct GridConfig {
  long n_max = 10;
  std::vector<std::string> identities;  // empty = every identity
  long zeta_terms = 200;
  double zeta_tol = 1e-9;
  bool strict_paper = false;
};

struct GridSummary {
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  bool all_passed() const { return failed == 0; }
};

// Identity names: symmetry, distribution, binomial, char-dist, multinomial,
// sum-powers, witt, funceq, zeta-interp.
const std::vector<std::string>& grid_identity_names();

std::vector<VerificationReport> run_verification_grid(const GridConfig& config,
                                                      GridSummary& summary);

}  // namespace unigen
