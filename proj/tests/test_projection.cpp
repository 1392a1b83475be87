#include <doctest.h>

#include "padic_euler/errors.hpp"
#include "padic_euler/projection.hpp"

using namespace padic_euler;

namespace {
PAdicNumber q(const Rational& v, long p = 5, long m = 20) { return PAdicNumber::from_rational(v, p, m); }
}  // namespace

TEST_CASE("teichmuller") {
  CHECK(eq_to_precision(teichmuller(q(1)), q(1), 20));

  PAdicNumber t = teichmuller(q(2, 5, 2));
  CHECK(t.unit() == 7);

  PAdicNumber w = teichmuller(q(2));
  CHECK(eq_to_precision(teichmuller(w), w, 20));
  CHECK(eq_to_precision(pow_int(w, 4), q(1), 20));

  CHECK_THROWS_AS(teichmuller(q(5)), NotAUnit);
  CHECK_THROWS_AS(teichmuller(q(Rational(1, 5))), NotAUnit);
}

TEST_CASE("teichmuller is a root of unity for every unit residue") {
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long a = 1; a < p; ++a) {
      PAdicNumber t = teichmuller(q(a + 3 * p, p, 15));
      CHECK(eq_to_precision(pow_int(t, p - 1), q(1, p, 15), 15));
      CHECK(t.unit() % p == a);
    }
  }
}

TEST_CASE("angle") {
  CHECK(eq_to_precision(angle(q(5)).value(), q(1), 19));
  CHECK(angle(q(2, 5, 2)).value().unit() == 11);
  PAdicNumber a = q(Rational(-17, 3));
  CHECK(eq_to_precision(angle(a).value(), angle(-a).value(), 20));
  CHECK_THROWS_AS(angle(PAdicNumber::zero(5, 10)), ZeroInput);
}

TEST_CASE("angle is multiplicative") {
  PAdicNumber a = q(Rational(12, 7));
  PAdicNumber b = q(Rational(-3, 50));
  CHECK(eq_to_precision(angle(a * b).value(), angle(a).value() * angle(b).value(), 20));
}

TEST_CASE("iwasawa_log") {
  CHECK(iwasawa_log(q(1)).is_zero());
  CHECK(iwasawa_log(q(5)).is_zero());
  PAdicNumber a = q(Rational(7, 3));
  PAdicNumber b = q(Rational(-2, 25));
  CHECK(eq_to_precision(iwasawa_log(a * b), iwasawa_log(a) + iwasawa_log(b), 19));
  CHECK_THROWS_AS(iwasawa_log(PAdicNumber::zero(5, 10)), ZeroInput);
}

TEST_CASE("iwasawa_log of 1 + p matches the series") {
  // log(6) = 5 - 25/2 + 125/3 - ... ; v(log(1+p)) = 1.
  PAdicNumber l = iwasawa_log(q(6));
  CHECK(l.valuation() == 1);
  PAdicNumber r = iwasawa_log(q(Rational(36)));
  CHECK(eq_to_precision(r, q(2) * l, 20));
}

TEST_CASE("one_unit_pow") {
  OneUnit z(q(Rational(6, 11)));
  CHECK(eq_to_precision(one_unit_pow(z, q(0)).value(), q(1), 20));
  CHECK(eq_to_precision(one_unit_pow(z, q(1)).value(), z.value(), 20));
  CHECK(eq_to_precision(one_unit_pow(z, q(2)).value(), z.value() * z.value(), 20));
  CHECK(eq_to_precision(one_unit_pow(z, q(-1)).value(), inv(z.value()), 20));
  PAdicNumber s = q(Rational(1, 3));
  PAdicNumber cube = pow_int(one_unit_pow(z, s).value(), 3);
  CHECK(eq_to_precision(cube, z.value(), 20));
  CHECK_THROWS_AS(one_unit_pow(z, q(Rational(1, 5))), ExponentNotIntegral);
}

TEST_CASE("log of a power") {
  OneUnit z(q(Rational(26, 21)));
  PAdicNumber s = q(Rational(-4, 7));
  CHECK(eq_to_precision(iwasawa_log(one_unit_pow(z, s).value()), s * iwasawa_log(z.value()), 20));
}

TEST_CASE("OneUnit rejects non one-units") {
  CHECK_THROWS_AS(OneUnit(q(2)), DomainError);
  CHECK_THROWS_AS(OneUnit(q(5)), DomainError);
}

TEST_CASE("binom_falling") {
  CHECK(eq_to_precision(binom_falling(q(Rational(2, 3)), 0), q(1), 20));
  for (long k = 0; k < 5; ++k) {
    for (long j = k + 1; j < 8; ++j) CHECK(binom_falling(q(k), j).is_zero());
  }
  CHECK(eq_to_precision(binom_falling(q(5), 2), q(10), 20));
  CHECK(eq_to_precision(binom_falling(q(-1), 3), q(-1), 20));
  PAdicNumber c = binom_falling(q(Rational(1, 2)), 7);
  CHECK(c.is_integral());
}
