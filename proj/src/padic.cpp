#include "padic_euler/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padic_euler {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_odd_prime(long p) {
  if (!is_odd_prime(p)) {
    throw InvalidPrime("p = " + std::to_string(p) + " is not an odd prime");
  }
}

long valuation(const BigInt& n, long p) {
  if (n == 0) return kInfiniteValuation;
  BigInt rest;
  BigInt base(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

long valuation(const Rational& q, long p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

long min_valuation(const std::vector<Rational>& values, long p) {
  long v = kInfiniteValuation;
  for (const Rational& q : values) v = std::min(v, valuation(q, p));
  return v;
}

BigInt pow_p(long p, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max(0L, e)));
  return r;
}

namespace {

void check_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
  if (a.prime() != b.prime()) {
    throw PrimeMismatch("operands over p = " + std::to_string(a.prime()) + " and p = " +
                        std::to_string(b.prime()));
  }
}

BigInt mod_nonneg(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// n with every factor p removed; the removed count goes to `count`.
BigInt strip_p(const BigInt& n, long p, long& count) {
  BigInt rest;
  BigInt base(p);
  count = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
  return rest;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DivisionByZeroAtPrecision("unit is not invertible modulo p^r");
  }
  return r;
}

// Valuation used in precision propagation: an element that is zero at
// precision M is only known to lie in p^M Z_p.
long effective_valuation(const PAdicNumber& a) { return a.is_zero() ? a.aprec() : a.valuation(); }

}  // namespace

PAdicNumber::PAdicNumber(long p, long val, BigInt unit, long aprec)
    : p_(p), val_(val), unit_(std::move(unit)), aprec_(aprec) {}

PAdicNumber PAdicNumber::zero(long p, long aprec) {
  require_odd_prime(p);
  return PAdicNumber(p, kInfiniteValuation, BigInt(0), aprec);
}

PAdicNumber PAdicNumber::one(long p, long aprec) { return from_integer(1, p, aprec); }

PAdicNumber PAdicNumber::normalized(long p, long base_val, BigInt x, long aprec) {
  const long r = aprec - base_val;
  if (r <= 0) return PAdicNumber(p, kInfiniteValuation, BigInt(0), aprec);
  x = mod_nonneg(x, pow_p(p, r));
  if (x == 0) return PAdicNumber(p, kInfiniteValuation, BigInt(0), aprec);
  long k = 0;
  BigInt u = strip_p(x, p, k);
  return PAdicNumber(p, base_val + k, std::move(u), aprec);
}

PAdicNumber PAdicNumber::from_rational(const Rational& q, long p, long aprec) {
  require_odd_prime(p);
  if (q == 0) return zero(p, aprec);
  long vn = 0;
  long vd = 0;
  BigInt num = strip_p(BigInt(q.get_num()), p, vn);
  BigInt den = strip_p(BigInt(q.get_den()), p, vd);
  const long v = vn - vd;
  if (v >= aprec) return zero(p, aprec);
  const BigInt modulus = pow_p(p, aprec - v);
  BigInt u = mod_nonneg(num * inverse_mod(den, modulus), modulus);
  return PAdicNumber(p, v, std::move(u), aprec);
}

PAdicNumber PAdicNumber::from_integer(long n, long p, long aprec) {
  return from_rational(Rational(n), p, aprec);
}

PAdicNumber PAdicNumber::truncated(long m) const {
  if (m >= aprec_) return *this;
  if (is_zero() || val_ >= m) return PAdicNumber(p_, kInfiniteValuation, BigInt(0), m);
  return PAdicNumber(p_, val_, mod_nonneg(unit_, pow_p(p_, m - val_)), m);
}

PAdicNumber PAdicNumber::unit_part() const {
  if (is_zero()) throw ZeroInput("unit part of an element that is zero at precision");
  return PAdicNumber(p_, 0, unit_, aprec_ - val_);
}

std::vector<long> PAdicNumber::digits() const {
  std::vector<long> out;
  if (is_zero()) return out;
  BigInt rest = unit_;
  const long r = relprec();
  out.reserve(static_cast<size_t>(r));
  for (long i = 0; i < r; ++i) {
    out.push_back(static_cast<long>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                                  static_cast<unsigned long>(p_))));
  }
  return out;
}

PAdicNumber add(const PAdicNumber& a, const PAdicNumber& b) {
  check_same_prime(a, b);
  const long m = std::min(a.aprec(), b.aprec());
  if (a.is_zero()) return b.truncated(m);
  if (b.is_zero()) return a.truncated(m);
  const long p = a.prime();
  const long w = std::min(a.valuation(), b.valuation());
  if (w >= m) return PAdicNumber::zero(p, m);
  BigInt sum = a.unit() * pow_p(p, a.valuation() - w) + b.unit() * pow_p(p, b.valuation() - w);
  return PAdicNumber::normalized(p, w, std::move(sum), m);
}

PAdicNumber neg(const PAdicNumber& a) {
  if (a.is_zero()) return a;
  return PAdicNumber::normalized(a.prime(), a.valuation(), -a.unit(), a.aprec());
}

PAdicNumber sub(const PAdicNumber& a, const PAdicNumber& b) { return add(a, neg(b)); }

PAdicNumber mul(const PAdicNumber& a, const PAdicNumber& b) {
  check_same_prime(a, b);
  const long p = a.prime();
  const long m = std::min(a.aprec() + effective_valuation(b), b.aprec() + effective_valuation(a));
  if (a.is_zero() || b.is_zero()) return PAdicNumber::zero(p, m);
  const long v = a.valuation() + b.valuation();
  return PAdicNumber::normalized(p, v, a.unit() * b.unit(), m);
}

PAdicNumber inv(const PAdicNumber& a) {
  if (a.is_zero()) {
    throw DivisionByZeroAtPrecision("inverse of an element that is zero modulo p^" +
                                    std::to_string(a.aprec()));
  }
  const long r = a.relprec();
  BigInt u = inverse_mod(a.unit(), pow_p(a.prime(), r));
  return PAdicNumber(a.prime(), -a.valuation(), std::move(u), r - a.valuation());
}

PAdicNumber div(const PAdicNumber& a, const PAdicNumber& b) { return mul(a, inv(b)); }

PAdicNumber pow_int(const PAdicNumber& a, long k) {
  if (k == 0) return PAdicNumber::one(a.prime(), a.is_zero() ? a.aprec() : a.relprec());
  if (k < 0) return inv(pow_int(a, -k));
  PAdicNumber result = a;
  int top = 62;
  while (((k >> top) & 1L) == 0) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = mul(result, result);
    if ((k >> bit) & 1L) result = mul(result, a);
  }
  return result;
}

PAdicNumber pochhammer(const PAdicNumber& s, long m) {
  PAdicNumber result = PAdicNumber::one(s.prime(), s.aprec());
  for (long i = 0; i < m; ++i) {
    result = mul(result, add(s, PAdicNumber::from_integer(i, s.prime(), s.aprec())));
  }
  return result;
}

Norm norm(const PAdicNumber& a) {
  const long p = a.prime();
  const long v = a.is_zero() ? a.aprec() : a.valuation();
  Rational value = v >= 0 ? Rational(1, pow_p(p, v)) : Rational(pow_p(p, -v));
  value.canonicalize();
  return Norm{value, a.is_zero()};
}

long valuation(const PAdicNumber& a) { return a.valuation(); }

bool eq_to_precision(const PAdicNumber& a, const PAdicNumber& b, long m) {
  check_same_prime(a, b);
  if (m > a.aprec() || m > b.aprec()) {
    throw RequestedPrecisionUnavailable("requested " + std::to_string(m) + " digits, operands carry " +
                                        std::to_string(a.aprec()) + " and " + std::to_string(b.aprec()));
  }
  const PAdicNumber d = sub(a, b);
  return d.is_zero() || d.valuation() >= m;
}

long agreement(const PAdicNumber& a, const PAdicNumber& b) {
  check_same_prime(a, b);
  const PAdicNumber d = sub(a, b);
  return d.is_zero() ? d.aprec() : std::min(d.valuation(), d.aprec());
}

std::string to_string(const PAdicNumber& a) {
  std::ostringstream out;
  const long p = a.prime();
  if (a.is_zero()) {
    out << "0 + O(" << p << "^" << a.aprec() << ")";
    return out.str();
  }
  out << p << "^" << a.valuation() << " * (";
  const std::vector<long> d = a.digits();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out << " + ";
    out << d[i];
    if (i == 1) out << "*" << p;
    if (i > 1) out << "*" << p << "^" << i;
  }
  out << ") + O(" << p << "^" << a.aprec() << ")";
  return out.str();
}

}  // namespace padic_euler
