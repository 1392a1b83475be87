#include "padic_euler/fermionic.hpp"

#include <algorithm>

#include "padic_euler/projection.hpp"

namespace padic_euler {

long IntegrandSpec::variables() const {
  return kind == IntegrandKind::custom ? custom_variables : static_cast<long>(omega.size());
}

IntegrandSpec IntegrandSpec::polynomial(long n, Rational x, std::vector<Rational> omega) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::polynomial;
  spec.n = n;
  spec.x = std::move(x);
  spec.omega = std::move(omega);
  return spec;
}

IntegrandSpec IntegrandSpec::log_shift(Rational x, std::vector<Rational> omega) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::log_shift;
  spec.x = std::move(x);
  spec.omega = std::move(omega);
  return spec;
}

IntegrandSpec IntegrandSpec::xlogx_shift(Rational x, std::vector<Rational> omega) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::xlogx_shift;
  spec.x = std::move(x);
  spec.omega = std::move(omega);
  return spec;
}

IntegrandSpec IntegrandSpec::angle_power(Rational x, std::vector<Rational> omega, Rational s) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::angle_power;
  spec.x = std::move(x);
  spec.omega = std::move(omega);
  spec.s = std::move(s);
  return spec;
}

IntegrandSpec IntegrandSpec::callback(long variables, Callback f) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::custom;
  spec.custom_variables = variables;
  spec.custom = std::move(f);
  return spec;
}

PAdicNumber evaluate_integrand(const IntegrandSpec& spec, const Rational& y, long p, long prec) {
  if (spec.starred) {
    const long vw = min_valuation(spec.omega, p);
    if (y == 0 || valuation(y, p) > vw) return PAdicNumber::zero(p, prec);
  }
  switch (spec.kind) {
    case IntegrandKind::polynomial: {
      Rational power = 1;
      for (long i = 0; i < spec.n; ++i) power *= y;
      return PAdicNumber::from_rational(power, p, prec);
    }
    case IntegrandKind::xlogx_shift: {
      if (y == 0) return PAdicNumber::zero(p, prec);
      // y (log_p y - 1) has valuation >= v(y); carry extra digits so the
      // product keeps `prec` absolute digits.
      const long extra = std::max(0L, -valuation(y, p));
      const PAdicNumber yp = PAdicNumber::from_rational(y, p, prec + extra);
      const PAdicNumber one = PAdicNumber::one(p, prec + extra);
      return mul(yp, sub(iwasawa_log(yp), one)).truncated(prec);
    }
    case IntegrandKind::log_shift:
    case IntegrandKind::angle_power: {
      if (y == 0) throw DomainError("integrand evaluated at x + omega.t = 0 (x in Lambda)");
      const long extra = std::max(0L, valuation(y, p));
      const PAdicNumber yp = PAdicNumber::from_rational(y, p, prec + extra);
      if (spec.kind == IntegrandKind::log_shift) return iwasawa_log(yp).truncated(prec);
      const PAdicNumber e = PAdicNumber::from_rational(1 - spec.s, p, prec);
      return one_unit_pow(angle(yp), e).value().truncated(prec);
    }
    case IntegrandKind::custom:
      break;
  }
  throw Error("evaluate_integrand: custom integrands are evaluated on t, not y");
}

PAdicNumber fermionic_sum_1d(const std::function<PAdicNumber(long)>& f, long p, long level) {
  require_odd_prime(p);
  if (level < 0) throw DomainError("level must be nonnegative");
  const long count = pow_p(p, level).get_si();
  PAdicNumber sum = f(0);
  for (long a = 1; a < count; ++a) {
    sum = (a % 2 == 0) ? add(sum, f(a)) : sub(sum, f(a));
  }
  return sum;
}

NumericIntegral fermionic_integral_numeric(const IntegrandSpec& spec, long p, long level, long prec,
                                           long long budget, long guard) {
  require_odd_prime(p);
  if (level < 1) throw DomainError("level must be at least 1");
  const long n_vars = spec.variables();
  const long work = prec + guard;

  std::vector<long> t(static_cast<size_t>(n_vars), 0);
  auto evaluate = [&]() -> PAdicNumber {
    if (spec.kind == IntegrandKind::custom) return spec.custom(t, p, work);
    Rational y = spec.x;
    for (long i = 0; i < n_vars; ++i) y += spec.omega[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
    return evaluate_integrand(spec, y, p, work);
  };

  if (n_vars == 0) {
    const PAdicNumber v = evaluate().truncated(prec);
    return NumericIntegral{v, v, level, prec, 1};
  }

  const BigInt side = pow_p(p, level);
  BigInt total;
  mpz_pow_ui(total.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(n_vars));
  if (total > BigInt(std::to_string(budget))) {
    throw BudgetExceeded("numeric integral needs " + total.get_str() + " evaluations, budget is " +
                         std::to_string(budget));
  }
  const long side_l = side.get_si();
  const long prev_side = pow_p(p, level - 1).get_si();

  // Row-major over (t_1, ..., t_N); S_{L-1} is the sub-sum over the smaller box.
  PAdicNumber current = PAdicNumber::zero(p, work);
  PAdicNumber previous = PAdicNumber::zero(p, work);
  long long terms = 0;
  while (true) {
    long parity = 0;
    bool inner = true;
    for (long ti : t) {
      parity += ti;
      inner = inner && ti < prev_side;
    }
    const PAdicNumber f = evaluate();
    ++terms;
    if (parity % 2 == 0) {
      current = add(current, f);
      if (inner) previous = add(previous, f);
    } else {
      current = sub(current, f);
      if (inner) previous = sub(previous, f);
    }
    long i = n_vars - 1;
    while (i >= 0 && ++t[static_cast<size_t>(i)] == side_l) {
      t[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  const long stabilized = std::min(prec, agreement(current, previous));
  return NumericIntegral{current.truncated(prec), previous.truncated(prec), level, stabilized, terms};
}

PAdicNumber fermionic_integral_exact_poly(long n, const Rational& x, const std::vector<Rational>& omega, long p,
                                          long prec) {
  if (n < 0) throw DegreeOutOfRange("degree must be nonnegative");
  return PAdicNumber::from_rational(euler_poly(omega, n, x), p, prec);
}

IdentityReport check_step_lemma(long k, long n, const Rational& x, const std::vector<Rational>& omega, long p,
                                long level, long prec) {
  if (k < 1 || k > static_cast<long>(omega.size())) {
    throw DomainError("step index k must satisfy 1 <= k <= N");
  }
  const std::vector<Rational> lower(omega.begin(), omega.begin() + (k - 1));
  const std::vector<Rational> upper(omega.begin(), omega.begin() + k);
  const EulerTable lower_table = build_table(lower, n);
  const Rational& step = omega[static_cast<size_t>(k - 1)];
  const long work = prec + kDefaultGuard;

  const IntegrandSpec spec = IntegrandSpec::callback(1, [&](std::span<const long> t, long pp, long w) {
    return PAdicNumber::from_rational(euler_poly(lower_table, n, x + step * t[0]), pp, w);
  });
  const NumericIntegral numeric = fermionic_integral_numeric(spec, p, level, prec);
  const PAdicNumber exact = PAdicNumber::from_rational(euler_poly(upper, n, x), p, work);

  IdentityReport report;
  report.name = "fermionic.step_lemma";
  report.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"x", x.get_str()},
                   {"p", std::to_string(p)}, {"L", std::to_string(level)}};
  report.agreement = std::min(prec, agreement(numeric.value, exact));
  report.required = numeric.stabilized;
  report.pass = report.agreement >= report.required;
  return report;
}

}  // namespace padic_euler
