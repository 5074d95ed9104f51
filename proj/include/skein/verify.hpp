#pragma once

#include <string>
#include <vector>

#include "skein/format.hpp"

namespace skein {

struct CheckResult {
  std::string id;    // "C1".."C13" for acceptance criteria, "P.." for anchored identities
  std::string name;
  bool pass = false;
  std::string computed;
  std::string expected;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// The thirteen acceptance criteria, in order.
std::vector<CheckResult> acceptance_checks();

/// Anchored identities beyond the criteria (single examples of each module).
std::vector<CheckResult> anchored_checks();

/// anchored_checks() followed by acceptance_checks().
VerifyReport verify_suite();

Json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace skein
