#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "padic_euler/errors.hpp"
#include "padic_euler/fermionic.hpp"
#include "padic_euler/identities.hpp"
#include "padic_euler/loggamma.hpp"
#include "padic_euler/zeta.hpp"

using namespace padic_euler;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

PAdicNumber q(const Rational& v, long p, long m) {
  const long e = v == 0 ? 0 : std::abs(valuation(v, p));
  return PAdicNumber::from_rational(v, p, m + e + 64);
}

ZetaRequest zreq(long p, long prec, const Rational& s, const Rational& x, std::vector<Rational> omega,
                 Strategy strategy = Strategy::automatic()) {
  ZetaRequest r;
  r.p = p;
  r.prec = prec;
  r.s = s;
  r.x = x;
  r.omega = std::move(omega);
  r.strategy = strategy;
  return r;
}

LogGammaRequest greq(long p, long prec, const Rational& x, std::vector<Rational> omega,
                     GammaStrategy strategy = GammaStrategy::automatic()) {
  LogGammaRequest r;
  r.p = p;
  r.prec = prec;
  r.x = x;
  r.omega = std::move(omega);
  r.strategy = strategy;
  return r;
}

// Folds identity reports into one verdict.
struct Tally {
  long total = 0;
  long failed = 0;
  long worst = -1;
  std::string first_failure;

  void add(const IdentityReport& r) {
    ++total;
    if (!r.exact && (worst < 0 || r.agreement < worst)) worst = r.agreement;
    if (!r.pass) {
      ++failed;
      if (first_failure.empty()) {
        std::ostringstream s;
        s << r.name;
        for (const auto& [k, v] : r.params) s << " " << k << "=" << v;
        s << " agreement " << r.agreement << "/" << r.required;
        if (!r.note.empty()) s << " (" << r.note << ")";
        first_failure = s.str();
      }
    }
  }
  void add(const std::vector<IdentityReport>& rs) {
    for (const IdentityReport& r : rs) add(r);
  }
  void fail(const std::string& what) {
    ++total;
    ++failed;
    if (first_failure.empty()) first_failure = what;
  }
  Verdict verdict(const std::string& label) const {
    std::ostringstream s;
    s << label << ": " << (total - failed) << "/" << total << " checks";
    if (worst >= 0) s << ", min agreement " << worst;
    if (!first_failure.empty()) s << "; first failure: " << first_failure;
    return {failed == 0 && total > 0, s.str()};
  }
};

std::vector<IdentityReport> registry_reports(const std::string& name, long prec, long instances, long p = 5) {
  CheckConfig cfg;
  cfg.p = p;
  cfg.prec = prec;
  cfg.instances = instances;
  cfg.seed = 20240601;
  return run_identity(find_identity(name), cfg);
}

std::string param(const IdentityReport& r, const std::string& key) {
  for (const auto& [k, v] : r.params) {
    if (k == key) return v;
  }
  return "";
}

Verdict interpolation() {
  Tally t;
  const std::vector<std::vector<Rational>> omegas{{}, {1}, {1, 2}, {1, 1}};
  const long m = 30;
  for (long p : {3L, 5L, 7L}) {
    for (const auto& w : omegas) {
      for (const Rational& x : {Rational(1, p), Rational(2, p), Rational(1, p * p)}) {
        for (long k = 1; k <= 6; ++k) {
          IdentityReport r;
          r.name = "interpolation";
          r.params = {{"p", std::to_string(p)}, {"N", std::to_string(w.size())}, {"omega", omega_string(w)},
                      {"x", x.get_str()}, {"k", std::to_string(k)}};
          r.required = m;
          try {
            const PAdicNumber lhs = zeta(zreq(p, m, 1 - k, x, w)).value;
            const PAdicNumber rhs = zeta_neg_int(k, x, w, p, m).value;
            r.agreement = digits_agree(lhs, rhs, m);
          } catch (const Error& e) {
            r.note = e.what();
          }
          r.pass = r.agreement >= m;
          t.add(r);
        }
      }
    }
  }
  return t.verdict("zeta(1-k) vs (<x>/x)^k E_{N,k}(x) over p in {3,5,7}, M = 30");
}

Verdict difference() {
  Tally t;
  const auto z = registry_reports("zeta.difference", 25, 50);
  const auto g = registry_reports("gamma.difference", 25, 50);
  t.add(z);
  t.add(g);
  bool base_z = false;
  bool base_g = false;
  for (const auto& r : z) base_z = base_z || (r.pass && param(r, "omega") == "1");
  for (const auto& r : g) base_g = base_g || (r.pass && param(r, "omega") == "1");
  if (!base_z) t.fail("zeta N = 1 base case missing");
  if (!base_g) t.fail("gamma N = 1 base case missing");
  return t.verdict("zeta and LogGamma difference equations, 50 random instances each plus base cases, M = 25");
}

Verdict reflection() {
  Tally t;
  t.add(registry_reports("zeta.reflection", 25, 25));
  t.add(registry_reports("gamma.reflection", 25, 25));
  return t.verdict("zeta reflection and LogGamma reflection sum, 25 random instances each, M = 25");
}

Verdict distribution() {
  Tally t;
  t.add(registry_reports("zeta.distribution", 20, 5));
  const auto g = registry_reports("gamma.distribution", 20, 5);
  t.add(g);
  bool exercised = false;
  for (const auto& r : g) {
    exercised = exercised || (param(r, "m") == "3" && r.note == "correction term nonzero" && r.pass);
  }
  if (!exercised) t.fail("no passing m = 3 instance with a nonzero E_{N,1}(x) log_p m term");
  return t.verdict("odd-m distribution for m = 3 and m = 5, LogGamma correction exercised, M = 20");
}

Verdict strategy_at_half() {
  Tally t;
  const long m = 20;
  const Rational x(1, 2);
  const std::vector<Rational> w{1};
  for (const Rational& s : {Rational(0), Rational(2), Rational(5)}) {
    try {
      const PAdicNumber a = zeta(zreq(5, m, s, x, w, Strategy::reduce(1))).value;
      const PAdicNumber b = zeta(zreq(5, m, s, x, w, Strategy::reduce(2))).value;
      IdentityReport r;
      r.name = "zeta";
      r.params = {{"s", s.get_str()}};
      r.required = m;
      r.agreement = digits_agree(a, b, m);
      r.pass = r.agreement >= m;
      t.add(r);
    } catch (const Error& e) {
      t.fail("zeta s = " + s.get_str() + ": " + e.what());
    }
  }
  try {
    const PAdicNumber a = log_gamma(greq(5, m, x, w, GammaStrategy::reduce(1))).value;
    const PAdicNumber b = log_gamma(greq(5, m, x, w, GammaStrategy::reduce(2))).value;
    IdentityReport r;
    r.name = "loggamma";
    r.required = m;
    r.agreement = digits_agree(a, b, m);
    r.pass = r.agreement >= m;
    t.add(r);
  } catch (const Error& e) {
    t.fail(std::string("loggamma: ") + e.what());
  }
  return t.verdict("x = 1/2, omega = (1), p = 5: reduce(1) vs reduce(2) for zeta at s = 0, 2, 5 and LogGamma");
}

// Not a criterion: the same comparison at a point off the lattice.
Verdict strategy_off_lattice() {
  Tally t;
  const long m = 20;
  const Rational x(1, 10);
  const std::vector<Rational> w{1};
  for (const Rational& s : {Rational(0), Rational(2), Rational(5)}) {
    const PAdicNumber series = zeta(zreq(5, m, s, x, w, Strategy::series())).value;
    for (long k = 1; k <= 2; ++k) {
      IdentityReport r;
      r.name = "zeta";
      r.params = {{"s", s.get_str()}, {"k", std::to_string(k)}};
      r.required = m;
      r.agreement = digits_agree(zeta(zreq(5, m, s, x, w, Strategy::reduce(k))).value, series, m);
      r.pass = r.agreement >= m;
      t.add(r);
    }
  }
  const PAdicNumber series = log_gamma(greq(5, m, x, w, GammaStrategy::stirling())).value;
  for (long k = 1; k <= 2; ++k) {
    IdentityReport r;
    r.name = "loggamma";
    r.params = {{"k", std::to_string(k)}};
    r.required = m;
    r.agreement = digits_agree(log_gamma(greq(5, m, x, w, GammaStrategy::reduce(k))).value, series, m);
    r.pass = r.agreement >= m;
    t.add(r);
  }
  return t.verdict("x = 1/10, omega = (1), p = 5: series = reduce(1) = reduce(2) for zeta at s = 0, 2, 5 and LogGamma");
}

Verdict backend_agreement() {
  Tally t;
  const long p = 5;
  const long m = 20;
  auto add = [&](const std::string& what, const NumericIntegral& num, const PAdicNumber& oracle) {
    IdentityReport r;
    r.name = what;
    r.params = {{"L", std::to_string(num.level)}, {"stabilized", std::to_string(num.stabilized)}};
    r.required = std::max(num.stabilized, 4L);
    r.agreement = digits_agree(num.value, oracle, num.stabilized);
    r.pass = num.stabilized >= 4 && r.agreement >= num.stabilized;
    t.add(r);
  };
  struct Poly {
    long n;
    Rational x;
    std::vector<Rational> omega;
  };
  const std::vector<Poly> polys{{1, 1, {5}}, {2, 1, {5}}, {3, Rational(2, 3), {5}}, {1, 1, {25, 25}},
                                {2, Rational(1, 3), {25, 50}}};
  for (const Poly& k : polys) {
    const long level = k.omega.size() == 1 ? 4 : 3;
    const NumericIntegral num = fermionic_integral_numeric(IntegrandSpec::polynomial(k.n, k.x, k.omega), p, level, m);
    add("polynomial n=" + std::to_string(k.n) + " omega=" + omega_string(k.omega), num,
        fermionic_integral_exact_poly(k.n, k.x, k.omega, p, m));
  }
  struct Gamma {
    Rational x;
    std::vector<Rational> omega;
  };
  for (const Gamma& k : std::vector<Gamma>{{Rational(1, 5), {1}}, {Rational(1, 25), {1, 1}}}) {
    const LogGammaRequest r = greq(p, m, k.x, k.omega);
    const long level = k.omega.size() == 1 ? 4 : 3;
    add("xlogx x=" + k.x.get_str() + " omega=" + omega_string(k.omega), log_gamma_integral_oracle(r, level),
        log_gamma_stirling(r).value);
  }
  return t.verdict("numeric integrals (N = 1 at L = 4, N = 2 at L = 3) vs exact table and Stirling series, >= 4 stabilized digits");
}

Verdict witt() {
  Tally t;
  t.add(registry_reports("fermionic.witt_euler_numbers", 20, 0));
  return t.verdict("E_n = int (2a+1)^n: 1, 0, -1, 0, 5, 0, -61 for n = 0..6, table exact and numeric on stabilized digits");
}

Verdict derivative_and_psi() {
  Tally t;
  for (const IdentityReport& r : registry_reports("zeta.derivative", 20, 3)) t.add(r);
  for (const IdentityReport& r : registry_reports("gamma.psi_closed_form", 20, 3)) {
    const std::string k = param(r, "k");
    if (k == "1" || k == "2") t.add(r);
  }
  t.add(registry_reports("gamma.stirling_psi_coefficients", 20, 3));
  return t.verdict("termwise zeta derivative (m = 1, 2) and psi closed form (k = 1, 2) at M = 20, symbolic coefficients to degree 12");
}

Verdict definitional_derivative() {
  const long p = 5;
  const long m = 20;
  const Rational x(1, 5);
  const std::vector<Rational> w{1};
  const long work = m + 20;
  const PAdicNumber target = log_gamma(greq(p, m, x, w)).value;
  const PAdicNumber ratio = q(x, p, work) / angle_of(x, p, work).value();
  const PAdicNumber at_zero = neg(zeta(zreq(p, work, 0, x, w)).value);
  std::vector<long> digits;
  for (long r = 3; r <= 5; ++r) {
    const Rational h = Rational(pow_p(p, r));
    const PAdicNumber at_h = zeta(zreq(p, work, h, x, w)).value / q(h - 1, p, work);
    const PAdicNumber quotient = (at_h - at_zero) / q(h, p, work);
    digits.push_back(digits_agree(quotient * ratio, target, m));
  }
  bool growing = true;
  std::string trace;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) {
      growing = growing && digits[i] >= digits[i - 1] + 1;
      trace += ", ";
    }
    trace += std::to_string(digits[i]);
  }
  return {growing, "difference quotient of zeta/(s-1) at s = 0, x = 1/5, h = 5^3, 5^4, 5^5: agreeing digits " + trace};
}

Verdict starred() {
  Tally t;
  const long p = 5;
  const long m = 20;
  const std::vector<Rational> w{1};
  for (const Rational& s : {Rational(0), Rational(2), Rational(-3)}) {
    const PAdicNumber sum = zeta_star(zreq(p, m, s, 0, w)).value;
    IntegrandSpec spec = IntegrandSpec::angle_power(0, w, s);
    spec.starred = true;
    const NumericIntegral num = fermionic_integral_numeric(spec, p, 4, m);
    IdentityReport r;
    r.name = "zeta*";
    r.params = {{"s", s.get_str()}, {"stabilized", std::to_string(num.stabilized)}};
    r.required = num.stabilized;
    r.agreement = digits_agree(sum, num.value, m);
    r.pass = num.stabilized >= 1 && r.agreement >= r.required;
    t.add(r);
  }
  {
    const PAdicNumber sum = log_gamma_star(greq(p, m, 0, w)).value;
    const IntegrandSpec spec = IntegrandSpec::callback(1, [](std::span<const long> tt, long pp, long prec) {
      const Rational y(tt[0]);
      if (y == 0 || valuation(y, pp) != 0) return PAdicNumber::zero(pp, prec);
      return evaluate_integrand(IntegrandSpec::xlogx_shift(0, {}), y / pp, pp, prec);
    });
    const NumericIntegral num = fermionic_integral_numeric(spec, p, 4, m);
    IdentityReport r;
    r.name = "LGamma*";
    r.params = {{"stabilized", std::to_string(num.stabilized)}};
    r.required = num.stabilized;
    r.agreement = digits_agree(sum, num.value, m);
    r.pass = num.stabilized >= 1 && r.agreement >= r.required;
    t.add(r);
  }
  for (const auto& small : std::vector<std::vector<Rational>>{{5}, {5, 10}, {Rational(25, 3)}}) {
    const PAdicNumber z = zeta_star(zreq(p, m, 2, 0, small)).value;
    const PAdicNumber g = log_gamma_star(greq(p, m, 0, small)).value;
    IdentityReport r;
    r.name = "zero convention omega=" + omega_string(small);
    r.exact = true;
    r.pass = z.is_zero() && g.is_zero() && z.aprec() == m && g.aprec() == m;
    t.add(r);
  }
  return t.verdict("zeta* and LGamma* at x = 0, omega = (1), p = 5 vs the starred integral at L = 4; zero for ||omega|| < 1");
}

Verdict alternating_sums() {
  Tally t;
  const auto reports = registry_reports("euler.alternating_sum", 20, 3);
  t.add(reports);
  bool even = false;
  bool odd = false;
  for (const auto& r : reports) {
    even = even || param(r, "case") == "even";
    odd = odd || param(r, "case") == "odd";
  }
  if (!even || !odd) t.fail("both parity cases must be exercised");
  return t.verdict("alternating sums of Euler polynomials, K <= 2, n <= 5, M = 1..6, exact over Q");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "interpolation", interpolation},
      {2, "difference equations", difference},
      {3, "reflection", reflection},
      {4, "distribution", distribution},
      {5, "strategy independence", strategy_at_half},
      {6, "backend agreement", backend_agreement},
      {7, "Witt formula", witt},
      {8, "derivative formula and psi closed form", derivative_and_psi},
      {9, "definitional s-derivative", definitional_derivative},
      {10, "starred functions", starred},
      {11, "Euler polynomial alternating sums", alternating_sums},
  };
  long failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << v.detail
              << std::endl;
    if (c.id == 5) {
      const Verdict extra = strategy_off_lattice();
      std::cout << "     supplementary, not counted: " << (extra.pass ? "pass" : "fail") << ": " << extra.detail
                << std::endl;
    }
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
