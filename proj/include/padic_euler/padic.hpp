#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

#include "padic_euler/errors.hpp"

namespace padic_euler {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Default guard digits added on top of the requested precision by the
// public evaluation entry points.
inline constexpr long kDefaultGuard = 10;

bool is_odd_prime(long p);
void require_odd_prime(long p);

// v_p of a nonzero integer / rational; kInfiniteValuation for zero.
long valuation(const BigInt& n, long p);
long valuation(const Rational& q, long p);

// min_i v_p(values_i); kInfiniteValuation for an empty list.
long min_valuation(const std::vector<Rational>& values, long p);

BigInt pow_p(long p, long e);

/*
 * Capped-precision element of Q_p.
 *
 * The value is p^v * u known modulo p^M, where M = aprec(). The unit u is
 * reduced modulo p^(M - v) and coprime to p. An element whose digits below
 * p^M all vanish is "zero at precision M" and has valuation
 * kInfiniteValuation. Values are immutable.
 */
class PAdicNumber {
 public:
  static PAdicNumber zero(long p, long aprec);
  static PAdicNumber one(long p, long aprec);
  static PAdicNumber from_rational(const Rational& q, long p, long aprec);
  static PAdicNumber from_integer(long n, long p, long aprec);

  long prime() const { return p_; }
  long aprec() const { return aprec_; }
  bool is_zero() const { return val_ == kInfiniteValuation; }
  long valuation() const { return val_; }
  // Digits known after the leading one: aprec - valuation; 0 for zero.
  long relprec() const { return is_zero() ? 0 : aprec_ - val_; }
  const BigInt& unit() const { return unit_; }

  // Same value, precision lowered to min(aprec, m).
  PAdicNumber truncated(long m) const;
  // Unit part p^-v * a as a valuation-0 element.
  PAdicNumber unit_part() const;

  // Base-p digits of the unit, least significant first (relprec entries).
  std::vector<long> digits() const;

  // v(a) >= 0.
  bool is_integral() const { return is_zero() || val_ >= 0; }

 private:
  PAdicNumber(long p, long val, BigInt unit, long aprec);
  static PAdicNumber normalized(long p, long base_val, BigInt x, long aprec);

  friend PAdicNumber add(const PAdicNumber&, const PAdicNumber&);
  friend PAdicNumber mul(const PAdicNumber&, const PAdicNumber&);
  friend PAdicNumber inv(const PAdicNumber&);
  friend PAdicNumber neg(const PAdicNumber&);

  long p_;
  long val_;
  BigInt unit_;
  long aprec_;
};

PAdicNumber add(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber sub(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber mul(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber inv(const PAdicNumber& a);
PAdicNumber div(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber neg(const PAdicNumber& a);
PAdicNumber pow_int(const PAdicNumber& a, long k);

// Rising product s (s+1) ... (s+m-1); 1 for m = 0.
PAdicNumber pochhammer(const PAdicNumber& s, long m);

inline PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) { return add(a, b); }
inline PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return sub(a, b); }
inline PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) { return mul(a, b); }
inline PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) { return div(a, b); }
inline PAdicNumber operator-(const PAdicNumber& a) { return neg(a); }

struct Norm {
  Rational value;
  // Set when the argument was zero at precision M: value is then p^-M,
  // only an upper bound for the true norm.
  bool upper_bound = false;
};

Norm norm(const PAdicNumber& a);
long valuation(const PAdicNumber& a);

// |a - b|_p <= p^-m. Throws RequestedPrecisionUnavailable when m exceeds
// the precision of either operand.
bool eq_to_precision(const PAdicNumber& a, const PAdicNumber& b, long m);

// Number of leading digits on which a and b provably agree:
// min(aprec(a), aprec(b), v(a - b)).
long agreement(const PAdicNumber& a, const PAdicNumber& b);

// `p^v * (d_0 + d_1*p + ... ) + O(p^M)`.
std::string to_string(const PAdicNumber& a);

}  // namespace padic_euler
