#include <doctest.h>

#include "padic_euler/errors.hpp"
#include "padic_euler/padic.hpp"

using namespace padic_euler;

namespace {
PAdicNumber q(const char* text, long p = 5, long m = 20) { return PAdicNumber::from_rational(Rational(text), p, m); }
}  // namespace

TEST_CASE("from_rational of a pure power of p") {
  PAdicNumber a = q("1/5", 5, 10);
  CHECK(a.valuation() == -1);
  CHECK(a.unit() == 1);
  CHECK(a.aprec() == 10);
}

TEST_CASE("from_rational of zero") {
  PAdicNumber a = q("0", 5, 10);
  CHECK(a.is_zero());
  CHECK(a.valuation() == kInfiniteValuation);
}

TEST_CASE("from_rational inverts the denominator") {
  PAdicNumber a = q("1/2", 5, 2);
  CHECK(a.valuation() == 0);
  CHECK(a.unit() == 13);
}

TEST_CASE("from_rational rejects bad primes") {
  CHECK_THROWS_AS(q("1", 4), InvalidPrime);
  CHECK_THROWS_AS(q("1", 2), InvalidPrime);
  CHECK_THROWS_AS(q("1", 1), InvalidPrime);
}

TEST_CASE("add") {
  PAdicNumber x = q("7/3", 5, 12);
  PAdicNumber z = PAdicNumber::zero(5, 8);
  PAdicNumber sum = x + z;
  CHECK(sum.aprec() == 8);
  CHECK(eq_to_precision(sum, x, 8));

  CHECK(eq_to_precision(q("1/2") + q("1/2"), q("1"), 20));

  PAdicNumber five = q("2") + q("3");
  CHECK(five.valuation() == 1);
  CHECK(five.unit() == 1);

  CHECK_THROWS_AS(q("1", 5) + q("1", 7), PrimeMismatch);
}

TEST_CASE("cancellation yields zero at precision") {
  PAdicNumber d = q("1/3", 5, 10) - q("1/3", 5, 10);
  CHECK(d.is_zero());
  CHECK(d.aprec() == 10);
}

TEST_CASE("mul, inv, pow_int") {
  PAdicNumber x = q("-11/6", 5, 15);
  CHECK(eq_to_precision(x * q("1"), x, 15));

  PAdicNumber seven = q("7", 5, 2);
  PAdicNumber i = inv(seven);
  CHECK(i.valuation() == 0);
  CHECK(i.unit() == 18);

  PAdicNumber one = pow_int(x, 0);
  CHECK(eq_to_precision(one, q("1"), 15));

  CHECK(eq_to_precision(pow_int(q("2"), 10), q("1024"), 20));
  CHECK(eq_to_precision(pow_int(q("2"), -2), q("1/4"), 20));
}

TEST_CASE("mul precision rule") {
  PAdicNumber a = q("5", 5, 10);   // v = 1
  PAdicNumber b = q("1/25", 5, 6);  // v = -2
  PAdicNumber c = a * b;
  CHECK(c.aprec() == std::min(10 - 2, 6 + 1));
  CHECK(c.valuation() == -1);
}

TEST_CASE("division by zero at precision") {
  CHECK_THROWS_AS(inv(PAdicNumber::zero(5, 10)), DivisionByZeroAtPrecision);
  CHECK_THROWS_AS(q("1") / PAdicNumber::zero(5, 10), DivisionByZeroAtPrecision);
}

TEST_CASE("norm and valuation") {
  CHECK(norm(q("5")).value == Rational(1, 5));
  CHECK(norm(q("1")).value == 1);
  CHECK(norm(q("1/5")).value == 5);
  CHECK(valuation(q("50")) == 2);
  Norm z = norm(PAdicNumber::zero(5, 7));
  CHECK(z.upper_bound);
  CHECK(z.value == Rational(1, 78125));
}

TEST_CASE("eq_to_precision") {
  PAdicNumber x = q("3/7", 5, 9);
  CHECK(eq_to_precision(x, x, 9));
  CHECK(eq_to_precision(q("1"), q("390626"), 8));
  CHECK_FALSE(eq_to_precision(q("1"), q("390626"), 9));
  CHECK_FALSE(eq_to_precision(q("1"), q("2"), 1));
  CHECK_THROWS_AS(eq_to_precision(x, x, 10), RequestedPrecisionUnavailable);
}

TEST_CASE("rendering") {
  CHECK(to_string(q("1/5", 5, 3)) == "5^-1 * (1 + 0*5 + 0*5^2 + 0*5^3) + O(5^3)");
  CHECK(to_string(q("0", 5, 4)) == "0 + O(5^4)");
  CHECK(q("-1", 3, 4).digits() == std::vector<long>{2, 2, 2, 2});
}

TEST_CASE("truncated keeps only the requested digits") {
  PAdicNumber a = q("-1", 5, 20).truncated(3);
  CHECK(a.aprec() == 3);
  CHECK(a.digits() == std::vector<long>{4, 4, 4});
}

TEST_CASE("pochhammer") {
  CHECK(eq_to_precision(pochhammer(q("3"), 3), q("60"), 20));
  CHECK(eq_to_precision(pochhammer(q("-1"), 2), q("0"), 20));
  CHECK(eq_to_precision(pochhammer(q("7"), 0), q("1"), 20));
}
