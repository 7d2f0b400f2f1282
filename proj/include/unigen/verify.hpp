#pragma once

#include <optional>
#include <string>
#include <vector>

namespace unigen {

// Outcome of one identity check over a range of indices. Exact comparisons
// only: `passed` means every index agreed coefficient-for-coefficient.
struct VerificationReport {
  std::string identity;
  std::string params;
  bool passed = false;
  bool skipped = false;
  std::string skip_reason;
  long checked = 0;                 // number of indices compared
  long first_failure_n = -1;
  std::string lhs;                  // printed values at the first failure
  std::string rhs;
  // Theorems whose printed statement differs from their proof carry the
  // printed form's agreement status here (nullopt when not applicable).
  std::optional<bool> printed_form_agrees;
  long printed_form_first_disagreement = -1;
  std::vector<std::string> notes;

  std::string status() const { return skipped ? "skip" : (passed ? "pass" : "fail"); }

  static VerificationReport pass(std::string identity, std::string params, long checked) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.passed = true;
    r.checked = checked;
    return r;
  }
  static VerificationReport fail(std::string identity, std::string params, long n,
                                 std::string lhs, std::string rhs) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.passed = false;
    r.first_failure_n = n;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
  }
  static VerificationReport skip(std::string identity, std::string params, std::string reason) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.skipped = true;
    r.skip_reason = std::move(reason);
    return r;
  }
};

}  // namespace unigen
