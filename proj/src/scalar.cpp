#include "grh/scalar.hpp"

#include <charconv>
#include <cmath>

namespace grh {

double Scalar::to_double() const {
  if (exact()) return rat().convert_to<double>();
  return std::get<double>(v_);
}

bool Scalar::is_zero() const {
  if (exact()) return rat().is_zero();
  return std::get<double>(v_) == 0.0;
}

int Scalar::exact_sign() const { return rat().sign(); }

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-rat()));
  return of_double(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rat() + b.rat()));
  return Scalar::of_double(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rat() - b.rat()));
  return Scalar::of_double(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rat() * b.rat()));
  return Scalar::of_double(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) {
    if (b.rat().is_zero()) throw Error("division by zero scalar");
    return Scalar(Rational(a.rat() / b.rat()));
  }
  return Scalar::of_double(a.to_double() / b.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rat() == b.rat();
  return a.to_double() == b.to_double();
}

std::string Scalar::str() const {
  if (exact()) return rat().str();
  double d = std::get<double>(v_);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

SignClass robust_sign(const Scalar& x, double scale, double tol) {
  if (x.exact()) {
    int s = x.exact_sign();
    if (s > 0) return SignClass::Positive;
    if (s < 0) return SignClass::Negative;
    return SignClass::ZeroOrUncertain;
  }
  double v = x.to_double();
  if (std::isnan(v)) return SignClass::ZeroOrUncertain;
  double band = tol * scale;
  if (std::abs(v) <= band) return SignClass::ZeroOrUncertain;
  return v > 0 ? SignClass::Positive : SignClass::Negative;
}

SignClass negated(SignClass c) {
  switch (c) {
    case SignClass::Positive:
      return SignClass::Negative;
    case SignClass::Negative:
      return SignClass::Positive;
    default:
      return SignClass::ZeroOrUncertain;
  }
}

}  // namespace grh
