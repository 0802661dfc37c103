#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grh/scalar.hpp"

namespace grh {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Coefficient a + b*i. Both parts live in the same arithmetic regime.
struct Complex {
  Scalar re, im;

  Complex() = default;
  Complex(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r, int i) : re(r), im(i) {}

  bool exact() const { return re.exact() && im.exact(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex demoted() const { return {re.demoted(), im.demoted()}; }
  Complex conj() const { return {re, -im}; }
  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // Throws DegenerateInput on a zero divisor; exact when both operands are.
  friend Complex operator/(const Complex& a, const Complex& b);
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

// How numeric literals pick their regime. Auto keeps integers, p/q
// fractions and binary-exact decimals (0.5, 0.25, ...) exact and demotes
// anything else (0.1, 1e-3, ...) to float.
enum class NumberMode { Auto, ForceExact, ForceFloat };

// Grammar: [sign] part [sign part] where part is NUMBER, NUMBER'i' or 'i',
// NUMBER an integer, p/q fraction or decimal (optional exponent). At most
// one real and one imaginary part. Throws ParseError with the offending
// position.
Complex parse_complex(std::string_view text, NumberMode mode = NumberMode::Auto);

// Single signed real literal.
Scalar parse_scalar(std::string_view text, NumberMode mode = NumberMode::Auto);

std::string to_string(const Complex& c);

// Monic polynomial q(s) = s^n + sum_{j=1..n} (a_j + i b_j) s^{n-j}.
// Coefficients are stored for j = 1..n in descending powers with the
// leading 1 implicit, so coeff(j) multiplies s^{n-j}. Construction unifies
// the arithmetic regime: if any part is float, every coefficient is
// demoted.
class ComplexPolynomial {
 public:
  explicit ComplexPolynomial(std::vector<Complex> trailing);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const Complex& coeff(int j) const { return coeffs_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  bool exact() const { return exact_; }

  ComplexPolynomial demoted() const;
  ComplexPolynomial conjugated() const;  // b_j -> -b_j

  Complex evaluate(const Complex& s) const;
  std::complex<double> evaluate(std::complex<double> s) const;

  // Comma-separated coefficient list, descending powers.
  std::string str() const;

 private:
  std::vector<Complex> coeffs_;
  bool exact_;
};

// Divides every trailing coefficient by `leading` (which must be nonzero);
// the roots are unchanged.
ComplexPolynomial monicize(const Complex& leading, std::vector<Complex> rest);

// Abscissa xi of the open half-plane Re(s) < xi.
struct HalfPlaneBound {
  Scalar xi;
};

// r(t) = p(t + xi) by repeated synthetic division. The roots of p lie left
// of xi exactly when the roots of r lie left of 0. Exact in the rational
// regime.
ComplexPolynomial shift_argument(const ComplexPolynomial& p, const HalfPlaneBound& bound);

ComplexPolynomial parse_polynomial_list(std::string_view text,
                                        NumberMode mode = NumberMode::Auto);

}  // namespace grh
