#include <doctest.h>

#include <random>

#include "grh/scalar.hpp"

using grh::Rational;
using grh::robust_sign;
using grh::Scalar;
using grh::SignClass;

TEST_CASE("robust_sign on exact rationals ignores scale") {
  CHECK(robust_sign(Scalar(Rational(3, 2)), 0.0) == SignClass::Positive);
  CHECK(robust_sign(Scalar(Rational(3, 2)), 1e300) == SignClass::Positive);
  CHECK(robust_sign(Scalar(0), 1.0) == SignClass::ZeroOrUncertain);
  CHECK(robust_sign(Scalar(-7), 1e9) == SignClass::Negative);
}

TEST_CASE("robust_sign float tolerance band") {
  CHECK(robust_sign(Scalar::of_double(1e-18), 1.0, 1e-12) ==
        SignClass::ZeroOrUncertain);
  CHECK(robust_sign(Scalar::of_double(1e-6), 1.0, 1e-12) == SignClass::Positive);
  CHECK(robust_sign(Scalar::of_double(-1e-6), 1.0, 1e-12) == SignClass::Negative);
  // scale zero leaves only the exact-zero band
  CHECK(robust_sign(Scalar::of_double(0.0), 0.0) == SignClass::ZeroOrUncertain);
  CHECK(robust_sign(Scalar::of_double(5e-10), 1.0) == SignClass::ZeroOrUncertain);
}

TEST_CASE("antisymmetry of robust_sign") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dv(-10.0, 10.0);
  std::uniform_real_distribution<double> ds(0.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    double v = dv(rng), s = ds(rng);
    Scalar x = Scalar::of_double(v);
    CHECK(robust_sign(-x, s) == grh::negated(robust_sign(x, s)));
  }
  std::uniform_int_distribution<int> di(-9, 9);
  std::uniform_int_distribution<int> dd(1, 9);
  for (int i = 0; i < 2000; ++i) {
    Scalar x{Rational(di(rng), dd(rng))};
    CHECK(robust_sign(-x, 0.0) == grh::negated(robust_sign(x, 0.0)));
  }
}

TEST_CASE("exact-mode soundness: nonzero rationals never classify uncertain") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> di(-9, 9);
  std::uniform_int_distribution<int> dd(1, 9);
  for (int i = 0; i < 3000; ++i) {
    int n = di(rng);
    if (n == 0) continue;
    Scalar x{Rational(n, dd(rng))};
    CHECK(robust_sign(x, 1e12) != SignClass::ZeroOrUncertain);
  }
}

TEST_CASE("monotonicity in tolerance") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dv(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    double v = dv(rng);
    Scalar x = Scalar::of_double(v);
    double t1 = std::uniform_real_distribution<double>(1e-12, 1e-3)(rng);
    double t2 = t1 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (robust_sign(x, 1.0, t1) == SignClass::Positive)
      CHECK(robust_sign(x, 1.0, t2) == SignClass::Positive);
  }
}

TEST_CASE("rationals are stored reduced with positive denominator") {
  CHECK(Scalar(Rational(6, 4)).str() == "3/2");
  CHECK(Scalar(Rational(-8, 2)).str() == "-4");
  CHECK(Scalar(Rational(0, 7)).str() == "0");
  // arithmetic keeps the sign in the numerator
  CHECK((Scalar(3) / Scalar(-6)).str() == "-1/2");
  CHECK(denominator((Scalar(3) / Scalar(-6)).rat()) == 2);
}

TEST_CASE("mixed-regime arithmetic demotes to double") {
  Scalar a(1);
  Scalar b = Scalar::of_double(0.5);
  Scalar c = a + b;
  CHECK_FALSE(c.exact());
  CHECK(c.to_double() == 1.5);
  CHECK((a * b).to_double() == 0.5);

  Scalar d = Scalar(Rational(3, 2)) / Scalar(3);
  CHECK(d.exact());
  CHECK(d == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), grh::Error);
}

TEST_CASE("exact arithmetic never rounds") {
  // (1/3 + 1/7) * 21 == 10 exactly; impossible in binary floating point.
  Scalar x = (Scalar(Rational(1, 3)) + Scalar(Rational(1, 7))) * Scalar(21);
  CHECK(x == Scalar(10));
}
