#include "padic_euler/projection.hpp"

#include <algorithm>

namespace padic_euler {

namespace {

// Exact integer carried with enough extra digits that dividing by it only
// costs v_p(n) digits of the dividend.
PAdicNumber exact_integer(long n, long p, long prec) {
  return PAdicNumber::from_integer(n, p, prec + 64);
}

long floor_log(long n, long p) {
  long k = 0;
  for (long q = p; q <= n; q *= p) ++k;
  return k;
}

}  // namespace

OneUnit::OneUnit(PAdicNumber z) : z_(std::move(z)) {
  if (z_.is_zero() || z_.valuation() != 0 || mpz_fdiv_ui(z_.unit().get_mpz_t(), z_.prime()) != 1) {
    throw DomainError("value is not congruent to 1 modulo p: " + to_string(z_));
  }
}

PAdicNumber teichmuller(const PAdicNumber& a) {
  if (a.is_zero() || a.valuation() != 0) {
    throw NotAUnit("teichmuller lift requires a unit, got " + to_string(a));
  }
  const long p = a.prime();
  const long r = a.aprec();
  const BigInt modulus = pow_p(p, r);
  const BigInt exponent(p);
  BigInt y = a.unit();
  BigInt next;
  // y^(p^n) is correct modulo p^(n+1), so r iterations always suffice.
  for (long it = 0; it <= r; ++it) {
    mpz_powm(next.get_mpz_t(), y.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    if (next == y) break;
    y = next;
  }
  return PAdicNumber::from_rational(Rational(y), p, r);
}

OneUnit angle(const PAdicNumber& a) {
  if (a.is_zero()) throw ZeroInput("<x> is undefined for x = 0 at precision " + std::to_string(a.aprec()));
  const PAdicNumber u = a.unit_part();
  return OneUnit(div(u, teichmuller(u)));
}

PAdicNumber iwasawa_log(const PAdicNumber& a) {
  const PAdicNumber z = angle(a).value();
  const long p = z.prime();
  const long r = z.aprec();
  const PAdicNumber u = sub(z, PAdicNumber::one(p, r));
  if (u.is_zero()) return PAdicNumber::zero(p, r);
  const long vu = u.valuation();
  // log(1 + u) = sum_{n>=1} (-1)^(n+1) u^n / n, with v(u^n / n) >= n vu - floor(log_p n).
  PAdicNumber sum = PAdicNumber::zero(p, r);
  PAdicNumber power = u;
  for (long n = 1; n * vu - floor_log(n, p) < r; ++n) {
    const PAdicNumber term = div(power, exact_integer(n, p, r));
    sum = (n % 2 == 1) ? add(sum, term) : sub(sum, term);
    power = mul(power, u);
  }
  return sum.truncated(r);
}

OneUnit one_unit_pow(const OneUnit& z, const PAdicNumber& s) {
  if (!s.is_integral()) {
    throw ExponentNotIntegral("exponent must lie in Z_p, got " + to_string(s));
  }
  const long p = z.prime();
  const long r = z.aprec();
  const PAdicNumber u = sub(z.value(), PAdicNumber::one(p, r));
  if (u.is_zero()) return z;
  const long vu = u.valuation();
  PAdicNumber sum = PAdicNumber::one(p, r);
  PAdicNumber coeff = PAdicNumber::one(p, s.aprec());
  PAdicNumber power = PAdicNumber::one(p, r);
  for (long j = 1; j * vu < r; ++j) {
    coeff = div(mul(coeff, sub(s, exact_integer(j - 1, p, s.aprec()))), exact_integer(j, p, s.aprec()));
    power = mul(power, u);
    sum = add(sum, mul(coeff, power));
  }
  return OneUnit(sum.truncated(r));
}

PAdicNumber binom_falling(const PAdicNumber& s, long j) {
  const long p = s.prime();
  PAdicNumber coeff = PAdicNumber::one(p, s.aprec());
  for (long i = 1; i <= j; ++i) {
    coeff = div(mul(coeff, sub(s, exact_integer(i - 1, p, s.aprec()))), exact_integer(i, p, s.aprec()));
  }
  return coeff;
}

}  // namespace padic_euler
