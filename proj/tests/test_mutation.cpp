#include <doctest.h>

#include <set>

#include "padic_euler/identities.hpp"

using namespace padic_euler;

TEST_CASE("flipped reflection fails exactly the two reflection identities") {
  CheckConfig cfg;
  cfg.instances = 2;
  std::set<std::string> failed;
  for (const IdentityReport& r : run_suite("all", cfg)) {
    if (!r.pass) failed.insert(r.name);
  }
  CHECK(failed == std::set<std::string>{"zeta.reflection", "gamma.reflection"});
}
