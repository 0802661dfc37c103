#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace grh {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Sign of a real value under a tolerance policy. In the exact regime
// ZeroOrUncertain means exactly zero; in the float regime it covers the
// band |value| <= tol * scale.
enum class SignClass { Positive, Negative, ZeroOrUncertain };

inline constexpr double kDefaultSignTol = 1e-9;

// A real number in one of two arithmetic regimes: exact rational
// (arbitrary precision, stored reduced with positive denominator) or IEEE
// double. Arithmetic between mixed regimes demotes the result to double;
// rational-only arithmetic never rounds.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}

  static Scalar of_double(double d) {
    Scalar s;
    s.v_ = d;
    return s;
  }
  static Scalar zero(bool exact_regime) {
    return exact_regime ? Scalar() : of_double(0.0);
  }
  static Scalar one(bool exact_regime) {
    return exact_regime ? Scalar(1) : of_double(1.0);
  }

  bool exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }
  double to_double() const;
  Scalar demoted() const { return exact() ? of_double(to_double()) : *this; }

  bool is_zero() const;
  int exact_sign() const;  // -1 / 0 / +1; exact regime only

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Exact in the rational regime. The divisor must be nonzero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  // Mixed-regime comparison falls back to double values.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "n" or "n/d" for rationals, shortest round-trip decimal for doubles.
  std::string str() const;

 private:
  std::variant<Rational, double> v_;
};

// Classifies x against the band tol*scale. Exact scalars classify by true
// sign and ignore the band entirely. Total: never throws; a non-finite
// float value classifies as ZeroOrUncertain when NaN, by sign otherwise.
SignClass robust_sign(const Scalar& x, double scale,
                      double tol = kDefaultSignTol);

SignClass negated(SignClass c);

}  // namespace grh
