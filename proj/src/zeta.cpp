#include "padic_euler/zeta.hpp"

#include <algorithm>
#include <regex>

namespace padic_euler {

ParameterVector::ParameterVector(std::vector<Rational> omegas, long p) : omegas_(std::move(omegas)), p_(p) {
  require_odd_prime(p);
  for (const Rational& w : omegas_) {
    if (w == 0) throw ZeroParameter("omega components must be nonzero");
  }
  min_val_ = padic_euler::min_valuation(omegas_, p);
}

Rational ParameterVector::norm() const {
  if (omegas_.empty()) return 0;
  Rational r = min_val_ >= 0 ? Rational(1, pow_p(p_, min_val_)) : Rational(pow_p(p_, -min_val_));
  r.canonicalize();
  return r;
}

Rational ParameterVector::total() const {
  Rational t = 0;
  for (const Rational& w : omegas_) t += w;
  return t;
}

bool in_lattice(const Rational& x, const ParameterVector& omega) {
  if (x == 0) return true;
  if (omega.size() == 0) return false;
  return valuation(x, omega.prime()) >= omega.min_valuation();
}

bool series_applicable(const Rational& x, const ParameterVector& omega) {
  if (x == 0) return false;
  if (omega.size() == 0) return true;
  return valuation(x, omega.prime()) < omega.min_valuation();
}

Strategy Strategy::parse(const std::string& text) {
  if (text == "auto") return automatic();
  if (text == "series") return series();
  static const std::regex reduce_re(R"(reduce\((\d+)\))");
  std::smatch m;
  if (std::regex_match(text, m, reduce_re)) {
    const long k = std::stol(m[1].str());
    if (k >= 1) return reduce(k);
  }
  throw DomainError("unknown strategy '" + text + "' (expected auto, series or reduce(k))");
}

std::string Strategy::name() const {
  switch (kind) {
    case Kind::automatic:
      return "auto";
    case Kind::series:
      return "series";
    case Kind::reduce:
      return "reduce(" + std::to_string(k) + ")";
  }
  return "auto";
}

Rational binomial_rational(const Rational& a, long j) {
  Rational c = 1;
  for (long i = 0; i < j; ++i) {
    c *= a - i;
    c /= i + 1;
  }
  return c;
}

OneUnit angle_of(const Rational& x, long p, long prec) {
  if (x == 0) throw ZeroInput("<x> is undefined at x = 0");
  return angle(PAdicNumber::from_rational(x, p, prec + valuation(x, p)));
}

void require_integral_exponent(const Rational& s, long p) {
  if (s != 0 && valuation(s, p) < 0) {
    throw ExponentNotIntegral("s = " + s.get_str() + " is not in Z_" + std::to_string(p));
  }
}

namespace detail {

Rational shifted(const Rational& x, const std::vector<long>& j, const std::vector<Rational>& omega) {
  Rational y = x;
  for (size_t i = 0; i < j.size(); ++i) y += omega[i] * j[i];
  return y;
}

PAdicNumber certify(const PAdicNumber& v, long prec, const char* what) {
  if (v.aprec() < prec) {
    throw PrecisionLoss(std::string(what) + ": only " + std::to_string(v.aprec()) + " digits survived, " +
                        std::to_string(prec) + " requested");
  }
  return v.truncated(prec);
}

long long shift_count(long p, long k, long n) {
  BigInt total;
  const BigInt side = pow_p(p, k);
  mpz_pow_ui(total.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(n));
  if (!total.fits_slong_p()) return std::numeric_limits<long long>::max();
  return total.get_si();
}

}  // namespace detail

namespace {

struct SeriesResult {
  PAdicNumber value;
  long terms;
};

// Smallest J with J d >= need, at least 1.
long terms_needed(long need, long d) {
  if (need <= 0) return 1;
  return std::max(1L, (need + d - 1) / d);
}

// <x>^(1-s) sum_{j<J} C(1-s, j) E_{N,j}(0) x^-j at working precision w.
SeriesResult series_at(const Rational& s, const Rational& x, const ParameterVector& omega, long w, long kmax_cap) {
  const long p = omega.prime();
  const long vx = valuation(x, p);
  const long d = omega.size() == 0 ? w : omega.min_valuation() - vx;
  const long count = terms_needed(w, d);
  const EulerTable table = build_table(omega.omegas(), count - 1, kmax_cap);
  const Rational a = 1 - s;
  Rational inv_x = 1 / x;
  Rational power = 1;
  PAdicNumber sum = PAdicNumber::zero(p, w);
  for (long j = 0; j < count; ++j) {
    const Rational& c = table.coeff(j);
    if (c != 0) sum = add(sum, PAdicNumber::from_rational(binomial_rational(a, j) * c * power, p, w));
    power *= inv_x;
  }
  const PAdicNumber e = PAdicNumber::from_rational(a, p, w);
  const PAdicNumber factor = one_unit_pow(angle_of(x, p, w), e).value();
  return {mul(factor, sum), count};
}

template <class F>
auto with_guard_retry(long guard, F&& body) {
  try {
    return body(guard);
  } catch (const PrecisionLoss&) {
    return body(2 * guard + 10);
  }
}

void validate(const ZetaRequest& req) {
  require_odd_prime(req.p);
  if (req.prec < 1) throw DomainError("precision must be at least 1");
  require_integral_exponent(req.s, req.p);
}

ZetaValue reduce_with(const ZetaRequest& req, const ParameterVector& omega, long k) {
  const long n = omega.size();
  const long long count = detail::shift_count(req.p, k, n);
  if (count > req.budget) {
    throw BudgetExceeded("reduction with k = " + std::to_string(k) + " needs " + std::to_string(count) +
                         " series evaluations, budget is " + std::to_string(req.budget));
  }
  const Rational scale = Rational(pow_p(req.p, k));
  std::vector<Rational> args;
  std::vector<int> signs;
  detail::for_each_shift(n, pow_p(req.p, k).get_si(), [&](const std::vector<long>& j, int sign) {
    const Rational y = detail::shifted(req.x, j, omega.omegas()) / scale;
    if (!series_applicable(y, omega)) {
      throw ReductionFailed("reduce(" + std::to_string(k) + "): shifted argument " + y.get_str() +
                            " is not in the series regime" +
                            (in_lattice(req.x, omega) ? " (x in Lambda; use zeta-star)" : ""));
    }
    args.push_back(y);
    signs.push_back(sign);
  });
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    PAdicNumber sum = PAdicNumber::zero(req.p, w);
    long terms = 0;
    for (size_t i = 0; i < args.size(); ++i) {
      const SeriesResult r = series_at(req.s, args[i], omega, w, req.kmax_cap);
      sum = signs[i] > 0 ? add(sum, r.value) : sub(sum, r.value);
      terms = std::max(terms, r.terms);
    }
    return ZetaValue{detail::certify(sum, req.prec, "zeta reduction"), "reduce(" + std::to_string(k) + ")", terms,
                     req.prec};
  });
}

bool admissible(const ZetaRequest& req, const ParameterVector& omega, long k) {
  const Rational scale = Rational(pow_p(req.p, k));
  bool ok = true;
  detail::for_each_shift(omega.size(), pow_p(req.p, k).get_si(), [&](const std::vector<long>& j, int) {
    ok = ok && series_applicable(detail::shifted(req.x, j, omega.omegas()) / scale, omega);
  });
  return ok;
}

}  // namespace

ZetaValue zeta_series(const ZetaRequest& req) {
  validate(req);
  const ParameterVector omega(req.omega, req.p);
  if (!series_applicable(req.x, omega)) {
    throw SeriesNotApplicable("series needs |x|_p > ||omega||_p, got x = " + req.x.get_str());
  }
  return with_guard_retry(req.guard, [&](long guard) {
    const SeriesResult r = series_at(req.s, req.x, omega, req.prec + guard, req.kmax_cap);
    return ZetaValue{detail::certify(r.value, req.prec, "zeta series"), "series", r.terms, req.prec};
  });
}

ZetaValue zeta(const ZetaRequest& req) {
  validate(req);
  const ParameterVector omega(req.omega, req.p);
  switch (req.strategy.kind) {
    case Strategy::Kind::series:
      return zeta_series(req);
    case Strategy::Kind::reduce:
      return reduce_with(req, omega, req.strategy.k);
    case Strategy::Kind::automatic:
      break;
  }
  if (series_applicable(req.x, omega)) return zeta_series(req);
  // Every p^k-reduction of a point of Lambda has a shift landing back in Lambda.
  if (in_lattice(req.x, omega)) throw ReductionFailed("x in Lambda; use zeta-star");
  for (long k = 1; k <= req.kcap; ++k) {
    if (detail::shift_count(req.p, k, omega.size()) > req.budget) {
      throw BudgetExceeded("reduction with k = " + std::to_string(k) + " exceeds the term budget");
    }
    if (admissible(req, omega, k)) return reduce_with(req, omega, k);
  }
  throw ReductionFailed("no admissible reduction with k <= " + std::to_string(req.kcap));
}

ZetaValue zeta_neg_int(long k, const Rational& x, const std::vector<Rational>& omega, long p, long prec) {
  if (k < 1) throw DomainError("k must be a positive integer");
  const ParameterVector pv(omega, p);
  if (!series_applicable(x, pv)) {
    throw SeriesNotApplicable("closed form needs |x|_p > ||omega||_p, got x = " + x.get_str());
  }
  const long w = prec + kDefaultGuard;
  Rational xk = 1;
  for (long i = 0; i < k; ++i) xk *= x;
  const PAdicNumber ratio = PAdicNumber::from_rational(euler_poly(omega, k, x) / xk, p, w);
  const PAdicNumber factor = pow_int(angle_of(x, p, w).value(), k);
  return ZetaValue{detail::certify(mul(factor, ratio), prec, "zeta closed form"), "closed_form", 1, prec};
}

ZetaValue zeta_star(const ZetaRequest& req) {
  validate(req);
  const ParameterVector omega(req.omega, req.p);
  if (!in_lattice(req.x, omega)) {
    throw NotInLambda("x = " + req.x.get_str() + " is outside Lambda; use zeta");
  }
  if (omega.size() == 0 || omega.min_valuation() > 0) {
    return ZetaValue{PAdicNumber::zero(req.p, req.prec), "star", 0, req.prec};
  }
  const long long count = detail::shift_count(req.p, 1, omega.size());
  if (count > req.budget) throw BudgetExceeded("starred sum exceeds the term budget");
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
      const SeriesResult r = series_at(req.s, args[i], omega, w, req.kmax_cap);
      sum = signs[i] > 0 ? add(sum, r.value) : sub(sum, r.value);
    }
    return ZetaValue{detail::certify(sum, req.prec, "zeta star"), "star", static_cast<long>(args.size()),
                     req.prec};
  });
}

PAdicNumber zeta_series_dx(const ZetaRequest& req, long m) {
  validate(req);
  if (m < 0) throw DomainError("derivative order must be nonnegative");
  const ParameterVector omega(req.omega, req.p);
  if (!series_applicable(req.x, omega)) {
    throw SeriesNotApplicable("series needs |x|_p > ||omega||_p, got x = " + req.x.get_str());
  }
  const long p = req.p;
  return with_guard_retry(req.guard, [&](long guard) {
    const long w = req.prec + guard;
    const long vx = valuation(req.x, p);
    const long d = omega.size() == 0 ? w + std::abs(m * vx) + 1 : omega.min_valuation() - vx;
    // Term j has valuation >= j d - m vx.
    const long count = terms_needed(w + m * vx, d);
    const EulerTable table = build_table(omega.omegas(), count - 1, req.kmax_cap);
    const Rational a = 1 - req.s;
    Rational inv_x = 1 / req.x;
    Rational power = 1;
    for (long i = 0; i < m; ++i) power *= inv_x;
    PAdicNumber sum = PAdicNumber::zero(p, w);
    for (long j = 0; j < count; ++j) {
      const Rational& c = table.coeff(j);
      if (c != 0) {
        Rational falling = 1;
        for (long i = 0; i < m; ++i) falling *= a - j - i;
        sum = add(sum, PAdicNumber::from_rational(binomial_rational(a, j) * falling * c * power, p, w));
      }
      power *= inv_x;
    }
    const PAdicNumber e = PAdicNumber::from_rational(a, p, w);
    const PAdicNumber factor = one_unit_pow(angle_of(req.x, p, w), e).value();
    return detail::certify(mul(factor, sum), req.prec, "zeta derivative series");
  });
}

PAdicNumber zeta_distribution(const ZetaRequest& req, long m) {
  validate(req);
  if (m < 1 || m % 2 == 0) throw DomainError("distribution needs an odd m >= 1");
  const ParameterVector omega(req.omega, req.p);
  const long long count = detail::shift_count(m, 1, omega.size());
  if (count > req.budget) throw BudgetExceeded("distribution sum exceeds the term budget");
  return with_guard_retry(req.guard, [&](long guard) {
    ZetaRequest sub_req = req;
    sub_req.prec = req.prec + guard;
    sub_req.strategy = Strategy::automatic();
    const long w = sub_req.prec;
    PAdicNumber sum = PAdicNumber::zero(req.p, w);
    detail::for_each_shift(omega.size(), m, [&](const std::vector<long>& j, int sign) {
      sub_req.x = detail::shifted(req.x, j, omega.omegas()) / m;
      const PAdicNumber v = zeta(sub_req).value;
      sum = sign > 0 ? add(sum, v) : sub(sum, v);
    });
    const PAdicNumber e = PAdicNumber::from_rational(1 - req.s, req.p, w);
    const PAdicNumber factor = one_unit_pow(angle_of(Rational(m), req.p, w), e).value();
    return detail::certify(mul(factor, sum), req.prec, "zeta distribution");
  });
}

}  // namespace padic_euler
