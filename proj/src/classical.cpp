#include "grh/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace grh {

namespace {

double row_scale(const std::vector<Scalar>& r) {
  double m = 0.0;
  for (const Scalar& s : r) m = std::max(m, std::abs(s.to_double()));
  return m;
}

}  // namespace

ClassicalRHTable classical_table(const std::vector<Scalar>& real_coeffs,
                                 double sign_tol) {
  const int n = static_cast<int>(real_coeffs.size());
  if (n < 1) throw DegenerateInput("classical array needs degree >= 1");

  const bool ex = std::all_of(real_coeffs.begin(), real_coeffs.end(),
                              [](const Scalar& s) { return s.exact(); });
  auto coeff = [&](int j) {  // a_j, 1-based; a_0 = 1
    if (j == 0) return Scalar::one(ex);
    if (j > n) return Scalar::zero(ex);
    const Scalar& s = real_coeffs[static_cast<std::size_t>(j - 1)];
    return ex ? s : s.demoted();
  };

  ClassicalRHTable t;
  t.degree = n;
  const std::size_t width = static_cast<std::size_t>(n / 2 + 1);

  std::vector<Scalar> r0(width, Scalar::zero(ex)), r1(width, Scalar::zero(ex));
  for (std::size_t c = 0; c < width; ++c) {
    r0[c] = coeff(static_cast<int>(2 * c));
    r1[c] = coeff(static_cast<int>(2 * c + 1));
  }
  t.rows.push_back(std::move(r0));
  t.rows.push_back(std::move(r1));

  for (int i = 2; i <= n; ++i) {
    const std::vector<Scalar>& prev = t.rows[static_cast<std::size_t>(i - 1)];
    const std::vector<Scalar>& prev2 = t.rows[static_cast<std::size_t>(i - 2)];
    const double scale = std::max(row_scale(prev), row_scale(prev2));
    if (robust_sign(prev[0], scale, sign_tol) == SignClass::ZeroOrUncertain)
      throw EarlyZeroError("zero first-column entry in row s^" +
                           std::to_string(n - i + 1));
    std::vector<Scalar> row(width, Scalar::zero(ex));
    for (std::size_t c = 0; c + 1 < width; ++c) {
      row[c] = (prev[0] * prev2[c + 1] - prev2[0] * prev[c + 1]) / prev[0];
    }
    t.rows.push_back(std::move(row));
  }

  t.first_column.reserve(static_cast<std::size_t>(n + 1));
  for (const auto& row : t.rows) t.first_column.push_back(row[0]);

  for (std::size_t i = 0; i < t.first_column.size(); ++i) {
    const double scale = row_scale(t.rows[i]);
    if (robust_sign(t.first_column[i], scale, sign_tol) == SignClass::ZeroOrUncertain)
      throw EarlyZeroError("zero first-column entry in row s^" +
                           std::to_string(n - static_cast<int>(i)));
  }
  return t;
}

StabilityVerdict classical_verdict(const std::vector<Scalar>& real_coeffs,
                                   double sign_tol) {
  StabilityVerdict v;
  ClassicalRHTable t;
  try {
    t = classical_table(real_coeffs, sign_tol);
  } catch (const EarlyZeroError&) {
    v.status = Stability::Inconclusive;
    return v;
  }
  for (std::size_t i = 0; i < t.first_column.size(); ++i) {
    const double scale = row_scale(t.rows[i]);
    if (robust_sign(t.first_column[i], scale, sign_tol) != SignClass::Positive) {
      v.status = Stability::NotHurwitz;
      v.first_failing_index = static_cast<int>(i + 1);
      return v;
    }
  }
  v.status = Stability::Hurwitz;
  return v;
}

}  // namespace grh
