#pragma once

#include <string>
#include <vector>

namespace segre {

// One self-check of the construction: a named property together with the
// factor counts it applies to.  Checks either recompute pinned counts and
// classifications or test structural invariants (form identities, group
// invariance, partition and incidence properties) at a fixed sampling scale,
// so results are deterministic.
struct CheckResult {
  std::string name;
  int m = 0;
  bool pass = false;
  std::string detail;  // counts on success, the discrepancy on failure
};

struct VerificationReport {
  std::vector<CheckResult> results;

  [[nodiscard]] bool all_passed() const;
};

struct CheckInfo {
  std::string name;
  std::string summary;
  std::vector<int> applicable_m;
};

const std::vector<CheckInfo>& available_checks();
bool check_applicable(const std::string& name, int m);

// Runs one named check; throws std::invalid_argument for an unknown name or
// an inapplicable factor count.
CheckResult run_check(const std::string& name, int m);

// Runs every check applicable at the given factor count.
VerificationReport run_all_checks(int m);

}  // namespace segre
