#pragma once

#include <string>
#include <utility>
#include <vector>

namespace padic_euler {

// Outcome of one identity check. `agreement` is the number of p-adic digits
// on which both sides provably agree (exact identities over Q report
// `exact`). The verdict is pass iff agreement >= required.
struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  long agreement = 0;
  long required = 0;
  bool exact = false;
  bool pass = false;
  std::string note;
};

}  // namespace padic_euler
