#include "grh/complex_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace grh {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), pos_(position) {}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw DegenerateInput("division by zero complex coefficient");
  Scalar denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  void skip_ws() {
    while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// A numeric literal, kept both as its exact rational value and as the
// correctly rounded double, plus whether the exact value survives binary
// floating point unchanged.
struct NumberLit {
  Rational value;
  double dvalue = 0.0;
  bool binary_exact = true;
};

BigInt parse_digits(Cursor& c) {
  if (!is_digit(c.peek())) throw ParseError("expected digits", c.i);
  BigInt v = 0;
  while (is_digit(c.peek())) {
    v = v * 10 + (c.s[c.i] - '0');
    ++c.i;
  }
  return v;
}

bool power_of_two(const BigInt& d) {
  if (d <= 0) return false;
  return (d & (d - 1)) == 0;
}

BigInt pow10(long long e) {
  BigInt r = 1;
  for (long long k = 0; k < e; ++k) r *= 10;
  return r;
}

// integer | integer '/' integer | decimal [.fraction] [exponent]
NumberLit parse_number(Cursor& c) {
  std::size_t start = c.i;
  BigInt intpart = parse_digits(c);
  if (c.peek() == '/') {
    ++c.i;
    std::size_t dpos = c.i;
    BigInt den = parse_digits(c);
    if (den == 0) throw ParseError("zero denominator", dpos);
    NumberLit lit;
    lit.value = Rational(intpart, den);
    lit.dvalue = lit.value.convert_to<double>();
    lit.binary_exact = true;  // p/q literals stay exact
    return lit;
  }
  BigInt frac = 0;
  long long frac_digits = 0;
  if (c.peek() == '.') {
    ++c.i;
    if (!is_digit(c.peek())) throw ParseError("expected digits after '.'", c.i);
    while (is_digit(c.peek())) {
      frac = frac * 10 + (c.s[c.i] - '0');
      ++c.i;
      ++frac_digits;
    }
  }
  long long exponent = 0;
  if (c.peek() == 'e' || c.peek() == 'E') {
    ++c.i;
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = c.peek() == '-';
      ++c.i;
    }
    if (!is_digit(c.peek())) throw ParseError("expected exponent digits", c.i);
    long long e = 0;
    while (is_digit(c.peek())) {
      e = e * 10 + (c.s[c.i] - '0');
      if (e > 1000000) throw ParseError("exponent out of range", c.i);
      ++c.i;
    }
    exponent = neg ? -e : e;
  }
  NumberLit lit;
  BigInt mantissa = intpart * pow10(frac_digits) + frac;
  long long net = exponent - frac_digits;
  if (net >= 0) {
    lit.value = Rational(mantissa * pow10(net));
    lit.binary_exact = true;
  } else {
    lit.value = Rational(mantissa, pow10(-net));
    lit.binary_exact = power_of_two(BigInt(denominator(lit.value)));
  }
  double d = 0.0;
  std::string_view text = c.s.substr(start, c.i - start);
  auto res = std::from_chars(text.data(), text.data() + text.size(), d);
  if (res.ec != std::errc()) {
    d = lit.value.convert_to<double>();
  }
  lit.dvalue = d;
  return lit;
}

struct Term {
  bool imaginary = false;
  NumberLit lit;
  bool negative = false;
  std::size_t pos = 0;
};

// magnitude := NUMBER 'i'? | 'i'
Term parse_magnitude(Cursor& c, bool negative) {
  Term t;
  t.negative = negative;
  t.pos = c.i;
  if (c.peek() == 'i') {
    ++c.i;
    t.imaginary = true;
    t.lit.value = 1;
    t.lit.dvalue = 1.0;
    return t;
  }
  t.lit = parse_number(c);
  if (c.peek() == 'i') {
    ++c.i;
    t.imaginary = true;
  }
  return t;
}

Scalar scalar_from(const NumberLit& lit, bool negative, bool exact_regime) {
  if (exact_regime) {
    Rational v = lit.value;
    if (negative) v = -v;
    return Scalar(std::move(v));
  }
  return Scalar::of_double(negative ? -lit.dvalue : lit.dvalue);
}

}  // namespace

Complex parse_complex(std::string_view text, NumberMode mode) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty coefficient", 0);

  std::vector<Term> terms;
  bool neg = false;
  if (c.peek() == '+' || c.peek() == '-') {
    neg = c.peek() == '-';
    ++c.i;
    c.skip_ws();
  }
  terms.push_back(parse_magnitude(c, neg));
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    neg = c.peek() == '-';
    ++c.i;
    c.skip_ws();
    terms.push_back(parse_magnitude(c, neg));
    c.skip_ws();
  }
  if (!c.done()) throw ParseError("unexpected trailing input", c.i);

  const Term* real_term = nullptr;
  const Term* imag_term = nullptr;
  for (const Term& t : terms) {
    const Term*& slot = t.imaginary ? imag_term : real_term;
    if (slot != nullptr)
      throw ParseError(t.imaginary ? "duplicate imaginary part" : "duplicate real part",
                       t.pos);
    slot = &t;
  }

  bool exact_regime;
  switch (mode) {
    case NumberMode::ForceExact:
      exact_regime = true;
      break;
    case NumberMode::ForceFloat:
      exact_regime = false;
      break;
    default:
      exact_regime = (real_term == nullptr || real_term->lit.binary_exact) &&
                     (imag_term == nullptr || imag_term->lit.binary_exact);
  }

  Complex out{Scalar::zero(exact_regime), Scalar::zero(exact_regime)};
  if (real_term) out.re = scalar_from(real_term->lit, real_term->negative, exact_regime);
  if (imag_term) out.im = scalar_from(imag_term->lit, imag_term->negative, exact_regime);
  return out;
}

Scalar parse_scalar(std::string_view text, NumberMode mode) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty number", 0);
  bool neg = false;
  if (c.peek() == '+' || c.peek() == '-') {
    neg = c.peek() == '-';
    ++c.i;
    c.skip_ws();
  }
  NumberLit lit = parse_number(c);
  c.skip_ws();
  if (!c.done()) throw ParseError("unexpected trailing input", c.i);
  bool exact_regime = mode == NumberMode::ForceExact ||
                      (mode == NumberMode::Auto && lit.binary_exact);
  return scalar_from(lit, neg, exact_regime);
}

std::string to_string(const Complex& c) {
  if (c.im.is_zero()) return c.re.str();
  std::string imag = c.im.str() + "i";
  if (c.re.is_zero()) return imag;
  if (!imag.empty() && imag[0] != '-') return c.re.str() + "+" + imag;
  return c.re.str() + imag;
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> trailing)
    : coeffs_(std::move(trailing)) {
  if (coeffs_.empty())
    throw DegenerateInput("polynomial degree must be at least 1");
  exact_ = std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Complex& c) { return c.exact(); });
  if (!exact_) {
    for (Complex& c : coeffs_) c = c.demoted();
  }
}

ComplexPolynomial ComplexPolynomial::demoted() const {
  std::vector<Complex> cs;
  cs.reserve(coeffs_.size());
  for (const Complex& c : coeffs_) cs.push_back(c.demoted());
  return ComplexPolynomial(std::move(cs));
}

ComplexPolynomial ComplexPolynomial::conjugated() const {
  std::vector<Complex> cs;
  cs.reserve(coeffs_.size());
  for (const Complex& c : coeffs_) cs.push_back(c.conj());
  return ComplexPolynomial(std::move(cs));
}

Complex ComplexPolynomial::evaluate(const Complex& s) const {
  Complex acc{Scalar::one(exact_), Scalar::zero(exact_)};
  for (const Complex& c : coeffs_) acc = acc * s + c;
  return acc;
}

std::complex<double> ComplexPolynomial::evaluate(std::complex<double> s) const {
  std::complex<double> acc{1.0, 0.0};
  for (const Complex& c : coeffs_) acc = acc * s + c.to_std();
  return acc;
}

std::string ComplexPolynomial::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += to_string(coeffs_[k]);
  }
  return out;
}

ComplexPolynomial monicize(const Complex& leading, std::vector<Complex> rest) {
  if (leading.is_zero())
    throw DegenerateInput("leading coefficient must be nonzero");
  for (Complex& c : rest) c = c / leading;
  return ComplexPolynomial(std::move(rest));
}

ComplexPolynomial shift_argument(const ComplexPolynomial& p, const HalfPlaneBound& bound) {
  const int n = p.degree();
  const bool ex = p.exact() && bound.xi.exact();
  Complex xi{ex ? bound.xi : bound.xi.demoted(), Scalar::zero(ex)};

  // Full coefficient array including the implicit leading 1, shifted in
  // place by repeated synthetic division.
  std::vector<Complex> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  c.emplace_back(Scalar::one(ex), Scalar::zero(ex));
  for (int j = 1; j <= n; ++j) c.push_back(ex ? p.coeff(j) : p.coeff(j).demoted());

  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      c[static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(j)] + xi * c[static_cast<std::size_t>(j - 1)];
    }
  }
  c.erase(c.begin());
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial parse_polynomial_list(std::string_view text, NumberMode mode) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view item = text.substr(start, end - start);
    try {
      coeffs.push_back(parse_complex(item, mode));
    } catch (const ParseError& e) {
      // Re-anchor the position to the full list.
      std::string msg = e.what();
      if (auto cut = msg.rfind(" at position"); cut != std::string::npos) msg.resize(cut);
      throw ParseError(msg, start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ComplexPolynomial(std::move(coeffs));
}

}  // namespace grh
