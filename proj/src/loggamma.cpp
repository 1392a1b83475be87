#include "padic_euler/loggamma.hpp"

#include <algorithm>
#include <regex>

namespace padic_euler {

GammaStrategy GammaStrategy::parse(const std::string& text) {
  if (text == "auto") return automatic();
  if (text == "stirling") return stirling();
  if (text == "integral_oracle") return integral_oracle();
  static const std::regex reduce_re(R"(reduce\((\d+)\))");
  std::smatch m;
  if (std::regex_match(text, m, reduce_re)) {
    const long k = std::stol(m[1].str());
    if (k >= 1) return reduce(k);
  }
  throw DomainError("unknown strategy '" + text + "' (expected auto, stirling, integral_oracle or reduce(k))");
}

std::string GammaStrategy::name() const {
  switch (kind) {
    case Kind::automatic:
      return "auto";
    case Kind::stirling:
      return "stirling";
    case Kind::integral_oracle:
      return "integral_oracle";
    case Kind::reduce:
      return "reduce(" + std::to_string(k) + ")";
  }
  return "auto";
}

namespace {

constexpr long kExactSlack = 64;

long floor_log(long n, long p) {
  long k = 0;
  for (long q = p; q <= n; q *= p) ++k;
  return k;
}

PAdicNumber exact(const Rational& q, long p, long w) {
  const long v = q == 0 ? 0 : valuation(q, p);
  return PAdicNumber::from_rational(q, p, w + kExactSlack + std::abs(v));
}

// log_p x with at least w - v(x) + 1 absolute digits.
PAdicNumber log_of(const Rational& x, long p, long w) {
  const long vx = valuation(x, p);
  const long digits = std::max(w, w - vx) + 1;
  return iwasawa_log(PAdicNumber::from_rational(x, p, digits + vx));
}

// Stirling series at absolute working precision w.
PAdicNumber stirling_at(const Rational& x, const ParameterVector& omega, long w, long kmax_cap, long* terms) {
  const long p = omega.prime();
  const long vx = valuation(x, p);
  const long extra = omega.size() > 0 ? std::max(0L, -omega.min_valuation()) : 0;
  const PAdicNumber logx = log_of(x, p, w + extra);
  const PAdicNumber xp = exact(x, p, w);
  PAdicNumber sum = mul(xp, sub(logx, PAdicNumber::one(p, logx.aprec())));
  if (omega.size() == 0) {
    if (terms != nullptr) *terms = 1;
    return sum.truncated(w);
  }
  const long d = omega.min_valuation() - vx;
  // Term j has valuation >= v(x) + j d - floor(log_p j).
  long count = 2;
  while (vx + count * d - floor_log(count, p) < w) ++count;
  const EulerTable table = build_table(omega.omegas(), count - 1, kmax_cap);
  sum = add(sum, mul(exact(table.coeff(1), p, w), logx));
  Rational power = 1 / x;  // x^(1-j) at j = 2
  for (long j = 2; j < count; ++j) {
    const Rational& c = table.coeff(j);
    if (c != 0) {
      Rational t = c * power / (j * (j - 1));
      if (j % 2 == 1) t = -t;
      sum = add(sum, PAdicNumber::from_rational(t, p, w));
    }
    power /= x;
  }
  if (terms != nullptr) *terms = count;
  return sum.truncated(w);
}

template <class F>
auto with_guard_retry(long guard, F&& body) {
  try {
    return body(guard);
  } catch (const PrecisionLoss&) {
    return body(2 * guard + 10);
  }
}

ParameterVector checked(const LogGammaRequest& req) {
  require_odd_prime(req.p);
  if (req.prec < 1) throw DomainError("precision must be at least 1");
  return ParameterVector(req.omega, req.p);
}

void require_series(const Rational& x, const ParameterVector& omega, const char* what) {
  if (!series_applicable(x, omega)) {
    throw SeriesNotApplicable(std::string(what) + " needs |x|_p > ||omega||_p, got x = " + x.get_str());
  }
}

LogGammaValue reduce_with(const LogGammaRequest& req, const ParameterVector& omega, long k) {
  const long n = omega.size();
  const long long count = detail::shift_count(req.p, k, n);
  if (count > req.budget) {
    throw BudgetExceeded("reduction with k = " + std::to_string(k) + " needs " + std::to_string(count) +
                         " Stirling evaluations, budget is " + std::to_string(req.budget));
  }
  const Rational scale = Rational(pow_p(req.p, k));
  std::vector<Rational> args;
  std::vector<int> signs;
  detail::for_each_shift(n, pow_p(req.p, k).get_si(), [&](const std::vector<long>& j, int sign) {
    const Rational y = detail::shifted(req.x, j, omega.omegas()) / scale;
    if (!series_applicable(y, omega)) {
      throw ReductionFailed("reduce(" + std::to_string(k) + "): shifted argument " + y.get_str() +
                            " is not in the Stirling regime" +
                            (in_lattice(req.x, omega) ? " (x in Lambda; use loggamma-star)" : ""));
    }
    args.push_back(y);
    signs.push_back(sign);
  });
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    PAdicNumber sum = PAdicNumber::zero(req.p, w);
    long terms = 0;
    for (size_t i = 0; i < args.size(); ++i) {
      long t = 0;
      const PAdicNumber v = stirling_at(args[i], omega, w, req.kmax_cap, &t);
      sum = signs[i] > 0 ? add(sum, v) : sub(sum, v);
      terms = std::max(terms, t);
    }
    const PAdicNumber value = mul(exact(scale, req.p, w), sum);
    return LogGammaValue{detail::certify(value, req.prec, "log gamma reduction"),
                         "reduce(" + std::to_string(k) + ")", terms, req.prec};
  });
}

PAdicNumber factorial(long n, long p, long w) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return exact(Rational(f), p, w);
}

}  // namespace

LogGammaValue log_gamma_stirling(const LogGammaRequest& req) {
  const ParameterVector omega = checked(req);
  require_series(req.x, omega, "Stirling series");
  return with_guard_retry(req.guard, [&](long guard) {
    long terms = 0;
    const PAdicNumber v = stirling_at(req.x, omega, req.prec + guard, req.kmax_cap, &terms);
    return LogGammaValue{detail::certify(v, req.prec, "Stirling series"), "stirling", terms, req.prec};
  });
}

LogGammaValue log_gamma(const LogGammaRequest& req) {
  const ParameterVector omega = checked(req);
  switch (req.strategy.kind) {
    case GammaStrategy::Kind::stirling:
      return log_gamma_stirling(req);
    case GammaStrategy::Kind::reduce:
      return reduce_with(req, omega, req.strategy.k);
    case GammaStrategy::Kind::integral_oracle: {
      const NumericIntegral r = log_gamma_integral_oracle(req, req.level);
      return LogGammaValue{r.value.truncated(r.stabilized), "integral_oracle", static_cast<long>(r.terms),
                           r.stabilized};
    }
    case GammaStrategy::Kind::automatic:
      break;
  }
  if (series_applicable(req.x, omega)) return log_gamma_stirling(req);
  if (in_lattice(req.x, omega)) throw ReductionFailed("x in Lambda; use loggamma-star");
  for (long k = 1; k <= req.kcap; ++k) {
    if (detail::shift_count(req.p, k, omega.size()) > req.budget) {
      throw BudgetExceeded("reduction with k = " + std::to_string(k) + " exceeds the term budget");
    }
    try {
      return reduce_with(req, omega, k);
    } catch (const ReductionFailed&) {
    }
  }
  throw ReductionFailed("no admissible reduction with k <= " + std::to_string(req.kcap));
}

NumericIntegral log_gamma_integral_oracle(const LogGammaRequest& req, long level) {
  const ParameterVector omega = checked(req);
  if (in_lattice(req.x, omega)) throw ReductionFailed("x in Lambda; use loggamma-star");
  const IntegrandSpec spec = IntegrandSpec::xlogx_shift(req.x, req.omega);
  return fermionic_integral_numeric(spec, req.p, level, req.prec, kDefaultNumericBudget, req.guard);
}

PAdicNumber psi(long k, const LogGammaRequest& req) {
  if (k < 1) throw DomainError("psi order must be at least 1");
  if (k == 1) return psi_series(1, req);
  const ParameterVector omega = checked(req);
  require_series(req.x, omega, "psi closed form");
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    ZetaRequest zr;
    zr.p = req.p;
    zr.prec = w + std::abs((k - 1) * valuation(req.x, req.p));
    zr.s = k;
    zr.x = req.x;
    zr.omega = req.omega;
    zr.guard = req.guard;
    zr.kmax_cap = req.kmax_cap;
    const PAdicNumber z = zeta_series(zr).value;
    Rational inv_power = 1;
    for (long i = 1; i < k; ++i) inv_power /= req.x;
    const PAdicNumber scale =
        mul(pow_int(angle_of(req.x, req.p, zr.prec).value(), k - 1), exact(inv_power, req.p, zr.prec));
    PAdicNumber v = mul(mul(factorial(k - 2, req.p, zr.prec), scale), z);
    if (k % 2 == 1) v = neg(v);
    return detail::certify(v, req.prec, "psi closed form");
  });
}

PAdicNumber psi_series(long k, const LogGammaRequest& req) {
  if (k < 1) throw DomainError("psi order must be at least 1");
  const ParameterVector omega = checked(req);
  require_series(req.x, omega, "psi series");
  const long p = req.p;
  const long vx = valuation(req.x, p);
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    if (k == 1) {
      PAdicNumber sum = log_of(req.x, p, w).truncated(w);
      if (omega.size() == 0) return detail::certify(sum, req.prec, "psi series");
      const long d = omega.min_valuation() - vx;
      // Term i has valuation >= i d - floor(log_p i).
      long count = 1;
      while (count * d - floor_log(count, p) < w) ++count;
      const EulerTable table = build_table(omega.omegas(), count, req.kmax_cap);
      Rational power = 1;
      for (long i = 1; i <= count; ++i) {
        power /= req.x;
        const Rational& c = table.coeff(i);
        if (c == 0) continue;
        Rational t = c * power;
        if (i >= 2) t /= i;
        if (i >= 2 && i % 2 == 0) t = -t;
        sum = add(sum, PAdicNumber::from_rational(t, p, w));
      }
      return detail::certify(sum, req.prec, "psi series");
    }
    const long d = omega.size() == 0 ? w + std::abs((k - 1) * vx) + 1 : omega.min_valuation() - vx;
    // Term j has valuation >= j d + (1 - k) v(x).
    long count = 1;
    while (count * d + (1 - k) * vx < w) ++count;
    const EulerTable table = build_table(omega.omegas(), count - 1, req.kmax_cap);
    BigInt fact = 1;
    for (long i = 2; i <= k - 2; ++i) fact *= i;
    Rational power = 1;
    for (long i = 1; i < k; ++i) power /= req.x;
    PAdicNumber sum = PAdicNumber::zero(p, w);
    for (long j = 0; j < count; ++j) {
      const Rational& c = table.coeff(j);
      if (c != 0) {
        Rational t = Rational(fact) * binomial_rational(Rational(-j - 1), k - 2) * c * power;
        if (j % 2 == 1) t = -t;
        sum = add(sum, PAdicNumber::from_rational(t, p, w));
      }
      power /= req.x;
    }
    return detail::certify(sum, req.prec, "psi series");
  });
}

LogGammaValue log_gamma_star(const LogGammaRequest& req) {
  const ParameterVector omega = checked(req);
  if (!in_lattice(req.x, omega)) {
    throw NotInLambda("x = " + req.x.get_str() + " is outside Lambda; use loggamma");
  }
  if (omega.size() == 0 || omega.min_valuation() > 0) {
    return LogGammaValue{PAdicNumber::zero(req.p, req.prec), "star", 0, req.prec};
  }
  if (detail::shift_count(req.p, 1, omega.size()) > req.budget) {
    throw BudgetExceeded("starred sum exceeds the term budget");
  }
  std::vector<Rational> args;
  std::vector<int> signs;
  detail::for_each_shift(omega.size(), req.p, [&](const std::vector<long>& j, int sign) {
    const Rational y = detail::shifted(req.x, j, omega.omegas());
    if (y != 0 && valuation(y, req.p) == omega.min_valuation()) {
      args.push_back(y / req.p);
      signs.push_back(sign);
    }
  });
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    PAdicNumber sum = PAdicNumber::zero(req.p, w);
    for (size_t i = 0; i < args.size(); ++i) {
      const PAdicNumber v = stirling_at(args[i], omega, w, req.kmax_cap, nullptr);
      sum = signs[i] > 0 ? add(sum, v) : sub(sum, v);
    }
    return LogGammaValue{detail::certify(sum, req.prec, "log gamma star"), "star", static_cast<long>(args.size()),
                         req.prec};
  });
}

PAdicNumber log_gamma_distribution(const LogGammaRequest& req, long m) {
  const ParameterVector omega = checked(req);
  if (m < 1 || m % 2 == 0) throw DomainError("distribution needs an odd m >= 1");
  if (detail::shift_count(m, 1, omega.size()) > req.budget) {
    throw BudgetExceeded("distribution sum exceeds the term budget");
  }
  return with_guard_retry(req.guard, [&](long guard) {
    LogGammaRequest sub_req = req;
    sub_req.prec = req.prec + guard + floor_log(m, req.p);
    sub_req.strategy = GammaStrategy::automatic();
    const long w = sub_req.prec;
    PAdicNumber sum = PAdicNumber::zero(req.p, w);
    detail::for_each_shift(omega.size(), m, [&](const std::vector<long>& j, int sign) {
      sub_req.x = detail::shifted(req.x, j, omega.omegas()) / m;
      const PAdicNumber v = log_gamma(sub_req).value;
      sum = sign > 0 ? add(sum, v) : sub(sum, v);
    });
    PAdicNumber value = mul(exact(Rational(m), req.p, w), sum);
    const Rational e1 = euler_poly(req.omega, 1, req.x);
    const PAdicNumber correction = mul(exact(e1, req.p, w), log_of(Rational(m), req.p, w));
    value = add(value, correction);
    return detail::certify(value, req.prec, "log gamma distribution");
  });
}

LogLaurent LogLaurent::derivative() const {
  LogLaurent out;
  out.logx = xlogx;
  if (xlogx != 0) out.coeffs[0] += xlogx;
  if (logx != 0) out.coeffs[-1] += logx;
  for (const auto& [i, c] : coeffs) {
    if (i != 0 && c != 0) out.coeffs[i - 1] += c * i;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool LogLaurent::operator==(const LogLaurent& other) const {
  auto nonzero = [](const std::map<long, Rational>& m) {
    std::map<long, Rational> out;
    for (const auto& [i, c] : m) {
      if (c != 0) out[i] = c;
    }
    return out;
  };
  return xlogx == other.xlogx && logx == other.logx && nonzero(coeffs) == nonzero(other.coeffs);
}

LogLaurent truncate_laurent(const LogLaurent& f, long max_degree) {
  LogLaurent out = f;
  std::erase_if(out.coeffs, [&](const auto& kv) { return kv.first < -max_degree || kv.second == 0; });
  return out;
}

LogLaurent stirling_laurent(const std::vector<Rational>& omega, long max_degree) {
  const EulerTable table = build_table(omega, max_degree + 1);
  LogLaurent f;
  f.xlogx = 1;
  f.coeffs[1] = -1;
  f.logx = table.coeff(1);
  for (long j = 2; 1 - j >= -max_degree; ++j) {
    Rational c = table.coeff(j) / (j * (j - 1));
    if (j % 2 == 1) c = -c;
    if (c != 0) f.coeffs[1 - j] += c;
  }
  return truncate_laurent(f, max_degree);
}

LogLaurent psi_laurent(const std::vector<Rational>& omega, long k, long max_degree) {
  if (k < 1) throw DomainError("psi order must be at least 1");
  const EulerTable table = build_table(omega, max_degree + 1);
  LogLaurent f;
  if (k == 1) {
    f.logx = 1;
    if (table.coeff(1) != 0) f.coeffs[-1] = table.coeff(1);
    for (long j = 1; j + 1 <= max_degree; ++j) {
      Rational c = table.coeff(j + 1) / (j + 1);
      if (j % 2 == 1) c = -c;
      if (c != 0) f.coeffs[-(j + 1)] = c;
    }
    return f;
  }
  BigInt fact = 1;
  for (long i = 2; i <= k - 2; ++i) fact *= i;
  for (long j = 0; k - 1 + j <= max_degree; ++j) {
    Rational c = Rational(fact) * binomial_rational(Rational(-j - 1), k - 2) * table.coeff(j);
    if (j % 2 == 1) c = -c;
    if (c != 0) f.coeffs[1 - k - j] = c;
  }
  return f;
}

}  // namespace padic_euler
