#pragma once

#include <utility>
#include <vector>

#include "grh/complex_poly.hpp"
#include "grh/verdict.hpp"

namespace grh {

// One level of the generalized table: a 2 x (n-p+1) block for level index
// p. Internally the builder carries, for each level, the full pair of
// sequences a_j^{(p)}, b_j^{(p)} (j = p..n); the two display rows interleave
// them by parity. Column j holds a_j^{(p)} in row 1 when j = p (mod 2) and
// b_j^{(p)} otherwise, with the complementary entry in row 2, so row 1
// always starts with the level pivot a_p^{(p)}.
struct RHLevel {
  int p = 0;
  std::vector<Scalar> row1, row2;
};

// Table growth roughly squares entry magnitudes per level, so float-mode
// levels whose maximum modulus leaves [1e-100, 1e100] are rescaled by that
// maximum. A whole-level positive factor multiplies every later pivot by a
// positive power and cannot flip any sign.
inline constexpr double kLevelRescaleHi = 1e100;
inline constexpr double kLevelRescaleLo = 1e-100;

struct TableOptions {
  // Stop construction at the first decisively non-positive pivot. The
  // verdict is identical either way; a full table is for display.
  bool short_circuit = false;
  double sign_tol = kDefaultSignTol;
  // Float-mode rescale window; outside [rescale_lo, rescale_hi] a level is
  // divided by its maximum modulus.
  double rescale_hi = kLevelRescaleHi;
  double rescale_lo = kLevelRescaleLo;
};

struct RHTable {
  explicit RHTable(ComplexPolynomial p) : polynomial(std::move(p)) {}

  ComplexPolynomial polynomial;
  int degree = 0;
  bool exact = true;
  std::vector<RHLevel> levels;  // p = 1..n-1; shorter when short-circuited
  Scalar final_pivot;           // a_n^{(n)}, valid when complete
  std::vector<Scalar> pivots;   // a_1^{(1)}, ..., a_n^{(n)}
  std::vector<SignClass> pivot_classes;
  std::vector<double> pivot_scales;  // float mode: magnitude reference per pivot
  std::vector<double> scaling_log;   // float mode: positive factor per level
  StabilityVerdict verdict;
  bool complete = false;
};

// Builds the table for a monic complex polynomial of degree n >= 1. The
// construction is division-free: zero pivots never abort it, they only
// decide the verdict. Level 1 and the final coefficient a_n^{(n)} follow
// the same two-pass recurrence as the interior levels once a virtual
// level-0 pivot pair (1, 0) is installed, which also covers n = 1 and
// n = 2 without special cases.
RHTable build_table(const ComplexPolynomial& p, TableOptions opt = {});

std::vector<Scalar> pivots(const RHTable& t);

// Verdict only, short-circuited.
StabilityVerdict hurwitz_verdict(const ComplexPolynomial& p,
                                 double sign_tol = kDefaultSignTol);

// Degree-4 closed forms. beta, gamma and final coincide with the table
// pivots a_2^{(2)}, a_3^{(3)}, a_4^{(4)}; eta equals b_4^{(3)} and epsilon
// equals a_4^{(2)}.
struct QuarticForms {
  Scalar beta, gamma, eta, epsilon, final;
};

QuarticForms quartic_closed_forms(const ComplexPolynomial& p);

}  // namespace grh
