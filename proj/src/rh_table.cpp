#include "grh/rh_table.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace grh {

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Hurwitz:
      return "hurwitz";
    case Stability::NotHurwitz:
      return "not_hurwitz";
    default:
      return "inconclusive";
  }
}

namespace {

std::size_t idx(int j) { return static_cast<std::size_t>(j); }

RHLevel make_level(int p, int n, const std::vector<Scalar>& A,
                   const std::vector<Scalar>& B) {
  RHLevel lvl;
  lvl.p = p;
  lvl.row1.reserve(idx(n - p + 1));
  lvl.row2.reserve(idx(n - p + 1));
  for (int j = p; j <= n; ++j) {
    if ((j - p) % 2 == 0) {
      lvl.row1.push_back(A[idx(j)]);
      lvl.row2.push_back(B[idx(j)]);
    } else {
      lvl.row1.push_back(B[idx(j)]);
      lvl.row2.push_back(A[idx(j)]);
    }
  }
  return lvl;
}

double abs_double(const Scalar& s) { return std::abs(s.to_double()); }

StabilityVerdict classify(const std::vector<SignClass>& classes, bool exact) {
  StabilityVerdict v;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k] == SignClass::Positive) continue;
    v.first_failing_index = static_cast<int>(k + 1);
    if (classes[k] == SignClass::Negative) {
      v.status = Stability::NotHurwitz;
    } else if (exact) {
      // An exact zero pivot: not all roots are strictly left of the axis.
      v.status = Stability::NotHurwitz;
      v.marginal = true;
    } else {
      v.status = Stability::Inconclusive;
    }
    return v;
  }
  v.status = Stability::Hurwitz;
  return v;
}

}  // namespace

RHTable build_table(const ComplexPolynomial& poly, TableOptions opt) {
  const int n = poly.degree();
  const bool ex = poly.exact();
  const Scalar zero = Scalar::zero(ex);

  RHTable t{poly};
  t.degree = n;
  t.exact = ex;

  // Level p-1 values a_j^{(p-1)}, b_j^{(p-1)}; index n+1 is a zero sentinel
  // so the last-column degenerate forms need no branching.
  std::vector<Scalar> Ap(idx(n + 2), zero), Bp(idx(n + 2), zero);
  for (int j = 1; j <= n; ++j) {
    Ap[idx(j)] = poly.coeff(j).re;
    Bp[idx(j)] = poly.coeff(j).im;
  }
  // Virtual level-0 pivot pair: makes level 1 (identity first row, combined
  // second row) an ordinary instance of the interior recurrence.
  Scalar alpha = Scalar::one(ex);
  Scalar beta = zero;

  for (int p = 1; p <= n; ++p) {
    std::vector<Scalar> Ac(idx(n + 2), zero), Bc(idx(n + 2), zero);

    // First pass / row 1: 2x2 determinants against level p-1.
    for (int j = p; j <= n; ++j) {
      if ((j - p) % 2 == 0) {
        Ac[idx(j)] = alpha * Ap[idx(j)] + beta * Bp[idx(j)];
      } else {
        Bc[idx(j)] = alpha * Bp[idx(j)] - beta * Ap[idx(j)];
      }
    }

    // Second pass / row 2: uses the fresh pivot a_p^{(p)} and the fresh
    // row-1 neighbour at j+1 (zero past the last column). The final level
    // p = n consists of the single coefficient a_n^{(n)} only.
    if (p < n) {
      for (int j = p; j <= n; ++j) {
        if ((j - p) % 2 == 1) {
          Ac[idx(j)] = Ac[idx(p)] * Ap[idx(j)] - alpha * Ac[idx(j + 1)];
        } else {
          Bc[idx(j)] = Ac[idx(p)] * Bp[idx(j)] - alpha * Bc[idx(j + 1)];
        }
      }
    }

    double scale = 0.0;
    if (!ex) {
      if (p < n) {
        double m = 0.0;
        for (int j = p; j <= n; ++j) {
          m = std::max(m, abs_double(Ac[idx(j)]));
          m = std::max(m, abs_double(Bc[idx(j)]));
        }
        double factor = 1.0;
        if (m > opt.rescale_hi || (m > 0.0 && m < opt.rescale_lo)) {
          factor = m;
          const Scalar inv = Scalar::of_double(1.0 / m);
          for (int j = p; j <= n; ++j) {
            Ac[idx(j)] = Ac[idx(j)] * inv;
            Bc[idx(j)] = Bc[idx(j)] * inv;
          }
          m = 1.0;
        }
        t.scaling_log.push_back(factor);
        scale = m;
      } else {
        // Magnitude reference for the final coefficient: the value itself
        // and the two products it sums, so cancellation cannot shrink it.
        scale = std::max(abs_double(Ac[idx(n)]),
                         std::max(std::abs(alpha.to_double() * Ap[idx(n)].to_double()),
                                  std::abs(beta.to_double() * Bp[idx(n)].to_double())));
      }
    }

    const Scalar piv = Ac[idx(p)];
    t.pivots.push_back(piv);
    if (!ex) t.pivot_scales.push_back(scale);
    t.pivot_classes.push_back(robust_sign(piv, scale, opt.sign_tol));

    if (p < n) {
      t.levels.push_back(make_level(p, n, Ac, Bc));
    } else {
      t.final_pivot = piv;
    }

    if (opt.short_circuit && t.pivot_classes.back() != SignClass::Positive) break;

    alpha = Ac[idx(p)];
    beta = p < n ? Bc[idx(p)] : zero;
    Ap.swap(Ac);
    Bp.swap(Bc);
  }

  t.complete = static_cast<int>(t.pivots.size()) == n;
  t.verdict = classify(t.pivot_classes, ex);
  return t;
}

std::vector<Scalar> pivots(const RHTable& t) { return t.pivots; }

StabilityVerdict hurwitz_verdict(const ComplexPolynomial& p, double sign_tol) {
  return build_table(p, {.short_circuit = true, .sign_tol = sign_tol}).verdict;
}

QuarticForms quartic_closed_forms(const ComplexPolynomial& p) {
  if (p.degree() != 4)
    throw DegenerateInput("quartic closed forms require degree 4");
  const Scalar &a1 = p.coeff(1).re, &b1 = p.coeff(1).im;
  const Scalar &a2 = p.coeff(2).re, &b2 = p.coeff(2).im;
  const Scalar &a3 = p.coeff(3).re, &b3 = p.coeff(3).im;
  const Scalar &a4 = p.coeff(4).re, &b4 = p.coeff(4).im;

  const Scalar u = a1 * b1 - b2;  // b_1^{(1)}
  const Scalar v = a1 * b3 - b4;  // b_3^{(1)}
  const Scalar w = a1 * v - a3 * u;

  QuarticForms f;
  f.beta = a1 * a1 * a2 - a1 * a3 + a1 * b1 * b2 - b2 * b2;
  f.gamma = f.beta * f.beta * a3 - f.beta * a1 * a1 * a1 * a4 -
            f.beta * (a1 * b4 + a3 * b2) * u + f.beta * a1 * b2 * v - a1 * w * w;
  f.epsilon = a1 * a1 * a4 + b4 * u;
  f.eta = f.beta * f.beta * b4 - (f.beta * b2 - a1 * w) * f.epsilon;
  f.final = f.gamma * f.gamma * f.epsilon +
            f.eta * (f.gamma * a1 * v - f.gamma * a3 * u - f.beta * f.eta);
  return f;
}

}  // namespace grh
