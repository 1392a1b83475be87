#include <doctest.h>

#include <json.hpp>

#include "padic_euler/errors.hpp"
#include "padic_euler/euler.hpp"

using namespace padic_euler;

TEST_CASE("euler numbers at zero") {
  CHECK(euler_number_poly_at_zero(0) == 1);
  CHECK(euler_number_poly_at_zero(1) == Rational(-1, 2));
  CHECK(euler_number_poly_at_zero(2) == 0);
  CHECK(euler_number_poly_at_zero(3) == Rational(1, 4));
  CHECK(euler_number_poly_at_zero(4) == 0);
  CHECK(euler_number_poly_at_zero(5) == Rational(-1, 2));
}

TEST_CASE("build_table") {
  EulerTable t0 = build_table({}, 5);
  CHECK(t0.order() == 0);
  CHECK(t0.coeff(0) == 1);
  for (long k = 1; k <= 5; ++k) CHECK(t0.coeff(k) == 0);

  EulerTable t1 = build_table({Rational(1)}, 3);
  CHECK(t1.coeffs() == std::vector<Rational>{1, Rational(-1, 2), 0, Rational(1, 4)});

  EulerTable t2 = build_table({Rational(1), Rational(1)}, 3);
  CHECK(t2.coeffs() == std::vector<Rational>{1, -1, Rational(1, 2), Rational(1, 2)});

  CHECK_THROWS_AS(build_table({Rational(1), Rational(0)}, 3), ZeroParameter);
  CHECK_THROWS_AS(build_table({Rational(1)}, 600), KmaxExceeded);
}

TEST_CASE("euler_poly") {
  EulerTable t0 = build_table({}, 3);
  CHECK(euler_poly(t0, 3, Rational(2, 7)) == Rational(8, 343));

  EulerTable t1 = build_table({Rational(1)}, 6);
  CHECK(euler_poly(t1, 2, Rational(1, 2)) == Rational(-1, 4));
  CHECK(euler_poly(t1, 2, Rational(1, 5)) == Rational(1, 25) - Rational(1, 5));

  CHECK(euler_poly({Rational(1), Rational(1)}, 1, Rational(0)) == -1);
  CHECK_THROWS_AS(euler_poly(t1, 7, Rational(0)), DegreeOutOfRange);
}

TEST_CASE("classical euler numbers from the half point") {
  EulerTable t = build_table({Rational(1)}, 6);
  const long expected[] = {1, 0, -1, 0, 5, 0, -61};
  for (long k = 0; k <= 6; ++k) {
    CHECK(Rational(BigInt(1) << k) * euler_poly(t, k, Rational(1, 2)) == expected[k]);
  }
}

TEST_CASE("classical_zeta_special_value") {
  EulerTable t0 = build_table({}, 4);
  CHECK(classical_zeta_special_value(t0, 4, Rational(3)) == 81);
  EulerTable t1 = build_table({Rational(1)}, 2);
  CHECK(classical_zeta_special_value(t1, 1, Rational(0)) == Rational(-1, 4));
  EulerTable t2 = build_table({Rational(1), Rational(1)}, 2);
  CHECK(classical_zeta_special_value(t2, 0, Rational(17, 3)) == Rational(1, 4));
}

TEST_CASE("integral omega gives 2-smooth denominators") {
  EulerTable t = build_table({Rational(3), Rational(-5), Rational(1)}, 20);
  for (const Rational& c : t.coeffs()) {
    BigInt d = c.get_den();
    while (d % 2 == 0) d /= 2;
    CHECK(d == 1);
  }
}

TEST_CASE("homogeneity and symmetry") {
  const std::vector<Rational> omega{Rational(2), Rational(-1, 3)};
  const Rational c(-5, 4);
  const std::vector<Rational> scaled{omega[0] * c, omega[1] * c};
  const Rational x(7, 9);
  for (long n = 0; n <= 6; ++n) {
    Rational cn = 1;
    for (long i = 0; i < n; ++i) cn *= c;
    CHECK(euler_poly(scaled, n, c * x) == cn * euler_poly(omega, n, x));
  }
  CHECK(build_table(omega, 8).coeffs() == build_table({omega[1], omega[0]}, 8).coeffs());
}

TEST_CASE("table json export") {
  nlohmann::json j = nlohmann::json::parse(table_to_json(build_table({Rational(1)}, 2)));
  REQUIRE(j.size() == 3);
  CHECK(j[1]["k"] == 1);
  CHECK(j[1]["num"] == "-1");
  CHECK(j[1]["den"] == "2");
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}
