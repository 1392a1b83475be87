#pragma once

#include "padic_euler/padic.hpp"

namespace padic_euler {

// Element of 1 + pZ_p: valuation 0 and leading digit 1.
class OneUnit {
 public:
  // Throws DomainError if z is not congruent to 1 modulo p.
  explicit OneUnit(PAdicNumber z);

  const PAdicNumber& value() const { return z_; }
  long prime() const { return z_.prime(); }
  long aprec() const { return z_.aprec(); }

 private:
  PAdicNumber z_;
};

// The (p-1)-st root of unity congruent to a unit a, to the precision of a.
// Computed by iterating y <- y^p until it is fixed modulo p^M.
PAdicNumber teichmuller(const PAdicNumber& a);

// <a> = p^-v(a) a / teichmuller(unit part of a).
OneUnit angle(const PAdicNumber& a);

// Iwasawa logarithm: log_p a = log_p <a>, so log_p p = 0.
PAdicNumber iwasawa_log(const PAdicNumber& a);

// z^s for s in Z_p by the binomial series sum_j C(s, j) (z - 1)^j.
OneUnit one_unit_pow(const OneUnit& z, const PAdicNumber& s);

// C(s, j) = s (s-1) ... (s-j+1) / j!.
PAdicNumber binom_falling(const PAdicNumber& s, long j);

}  // namespace padic_euler
