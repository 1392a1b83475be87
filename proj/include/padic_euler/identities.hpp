#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "padic_euler/padic.hpp"
#include "padic_euler/report.hpp"
#include "padic_euler/zeta.hpp"

namespace padic_euler {

struct CheckConfig {
  long p = 5;
  long prec = 20;
  long guard = kDefaultGuard;
  long long budget = kDefaultTermBudget;
  long kcap = kDefaultReductionCap;
  std::uint64_t seed = 0;
  long instances = 3;
};

using Rng = std::mt19937_64;

struct Identity {
  std::string name;  // "<suite>.<identity>"
  std::function<std::vector<IdentityReport>(const CheckConfig&, Rng&)> run;
  std::string suite() const { return name.substr(0, name.find('.')); }
};

// Every identity, in canonical order.
const std::vector<Identity>& identity_registry();
const Identity& find_identity(const std::string& name);

// Runs one identity with its own seeded stream; exceptions become failing reports.
std::vector<IdentityReport> run_identity(const Identity& identity, const CheckConfig& cfg);
// suite: "all" or one of padic, projection, euler, fermionic, zeta, gamma.
std::vector<IdentityReport> run_suite(const std::string& suite, const CheckConfig& cfg);

// |omega| - x, the partner point of the reflection identities.
Rational reflected_point(const Rational& x, const std::vector<Rational>& omega);

// Random instance helpers (rng() % n mapping, so streams are reproducible).
namespace sample {
long uniform(Rng& rng, long lo, long hi);
// a/b with a, b prime to p.
Rational unit_rational(Rng& rng, long p);
// omega_i = p^e * unit with e in {0, 1} (e = 0 for the first component).
std::vector<Rational> omega(Rng& rng, long p, long n);
// x with |x|_p = p^e ||omega||_p, e in {1, 2}.
Rational large_x(Rng& rng, long p, const std::vector<Rational>& omega);
// s in {0, +-1, +-2, three-digit integer, unit rational}.
Rational exponent(Rng& rng, long p);
}  // namespace sample

// Number of digits on which a and b agree, capped at m.
long digits_agree(const PAdicNumber& a, const PAdicNumber& b, long m);

IdentityReport compare_report(std::string name, std::vector<std::pair<std::string, std::string>> params,
                              const PAdicNumber& lhs, const PAdicNumber& rhs, long required);
IdentityReport exact_report(std::string name, std::vector<std::pair<std::string, std::string>> params, bool equal);

std::string omega_string(const std::vector<Rational>& omega);

}  // namespace padic_euler
