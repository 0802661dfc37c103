#pragma once

#include <vector>

#include "grh/scalar.hpp"
#include "grh/verdict.hpp"

namespace grh {

// A first-column zero makes the division-based scheme inapplicable (the
// epsilon workaround is deliberately not implemented).
class EarlyZeroError : public Error {
 public:
  using Error::Error;
};

// Classical array for a real monic polynomial, rows s^n down to s^0.
struct ClassicalRHTable {
  int degree = 0;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> first_column;  // n+1 entries
};

// real_coeffs: a_1..a_n of s^n + a_1 s^{n-1} + ... + a_n, descending.
// Throws EarlyZeroError when any first-column entry is zero (or, in float,
// indistinguishable from zero).
ClassicalRHTable classical_table(const std::vector<Scalar>& real_coeffs,
                                 double sign_tol = kDefaultSignTol);

// Hurwitz exactly when the whole first column is positive; EarlyZero maps
// to Inconclusive.
StabilityVerdict classical_verdict(const std::vector<Scalar>& real_coeffs,
                                   double sign_tol = kDefaultSignTol);

}  // namespace grh
