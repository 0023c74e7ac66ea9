#include <doctest.h>

#include "core/scalar.hpp"

using namespace petrov;

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_to_string(Rational(3, 6)) == "1/2");
  CHECK(rat_from_string("-4/8") == Rational(-1, 2));
  CHECK(rat_from_string(" 7 ") == Rational(7));
  CHECK(rat_to_string(Rational(-5)) == "-5");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("rationals stay normalized") {
  Rational q = Rational(6) / Rational(-4);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
}

TEST_CASE("sign convention") {
  CHECK(sign_pm(Rational(0)) == 1);
  CHECK(sign_pm(Rational(-3)) == -1);
  CHECK(sign_pm(Rational(5, 7)) == 1);
}

TEST_CASE("exact square roots") {
  CHECK(*rat_sqrt_exact(Rational(49, 4)) == Rational(7, 2));
  CHECK(!rat_sqrt_exact(Rational(2)));
  CHECK(!rat_sqrt_exact(Rational(-1)));
  CHECK(*rat_sqrt_exact(Rational(0)) == 0);
}

TEST_CASE("scalar promotion rules") {
  Scalar a(Rational(1, 3));
  Scalar b = Scalar::approx(0.25);
  CHECK((a + a).is_exact());
  CHECK((a + a).exact_value() == Rational(2, 3));
  CHECK(!(a + b).is_exact());
  CHECK((a * Scalar(3)).exact_value() == 1);
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("transcendental wrappers stay exact at zero") {
  CHECK(s_exp(Scalar(0)).is_exact());
  CHECK(s_exp(Scalar(0)).exact_value() == 1);
  CHECK(s_cos(Scalar(0)).exact_value() == 1);
  CHECK(s_sin(Scalar(0)).exact_value() == 0);
  CHECK(s_arctan(Scalar(0)).exact_value() == 0);
  CHECK(!s_exp(Scalar(1)).is_exact());
  CHECK(s_sqrt(Scalar(Rational(9, 16))).exact_value() == Rational(3, 4));
  CHECK(!s_sqrt(Scalar(2)).is_exact());
}

TEST_CASE("approx equality uses the global tolerance") {
  Scalar a = Scalar::approx(1.0);
  Scalar b = Scalar::approx(1.0 + 1e-12);
  CHECK(scalar_eq(a, b));
  Scalar c = Scalar::approx(1.0 + 1e-6);
  CHECK(!scalar_eq(a, c));
}
