#include "grh/root_oracle.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

namespace grh {

namespace {

using cd = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Eval {
  cd value;
  cd derivative;
  double noise_floor;  // running |coeff|-weighted Horner bound at z
};

// One Horner sweep for value, derivative and the attainable-precision
// floor: once |p(z)| drops under ~eps * sum |c_j| |z|^{n-j}, the computed
// value is rounding noise and the approximation cannot improve. This is
// what keeps multiple roots from stalling the iteration.
Eval eval_full(const std::vector<cd>& c, cd z) {
  const double az = std::abs(z);
  cd v = c[0];
  cd d = 0.0;
  double s = std::abs(c[0]);
  for (std::size_t j = 1; j < c.size(); ++j) {
    d = d * z + v;
    v = v * z + c[j];
    s = s * az + std::abs(c[j]);
  }
  return {v, d, 4.0 * kEps * s};
}

}  // namespace

RootSet all_roots(const ComplexPolynomial& p, const OracleOptions& opt) {
  const int n = p.degree();
  std::vector<cd> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  double max_coeff = 0.0;
  for (int j = 1; j <= n; ++j) {
    c[static_cast<std::size_t>(j)] = p.coeff(j).to_std();
    max_coeff = std::max(max_coeff, std::abs(c[static_cast<std::size_t>(j)]));
  }

  RootSet rs;
  rs.roots.resize(static_cast<std::size_t>(n));
  const double radius = 1.0 + max_coeff;
  // A fixed angular offset breaks the symmetry that can stall conjugate
  // pairs on real-coefficient input.
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    rs.roots[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  bool settled = false;
  const cd nudge = std::polar(1.0, 0.9);
  std::vector<bool> at_floor(static_cast<std::size_t>(n), false);

  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    double max_move = 0.0;
    double max_mag = 0.0;
    bool all_at_floor = true;

    for (int k = 0; k < n; ++k) {
      cd& z = rs.roots[static_cast<std::size_t>(k)];
      Eval e = eval_full(c, z);
      if (std::abs(e.value) <= e.noise_floor) {
        at_floor[static_cast<std::size_t>(k)] = true;
        continue;  // cannot be improved in this precision
      }
      at_floor[static_cast<std::size_t>(k)] = false;
      all_at_floor = false;

      if (e.derivative == cd(0.0)) {
        z *= nudge;
        max_move = radius;
        continue;
      }
      cd newton = e.value / e.derivative;
      cd repulsion = 0.0;
      bool clash = false;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        cd diff = z - rs.roots[static_cast<std::size_t>(j)];
        if (diff == cd(0.0)) {
          clash = true;
          break;
        }
        repulsion += 1.0 / diff;
      }
      if (clash) {
        z *= nudge;
        max_move = radius;
        continue;
      }
      cd denom = 1.0 - newton * repulsion;
      cd step = denom == cd(0.0) ? newton : newton / denom;
      if (!finite(step)) {
        z *= nudge;
        max_move = radius;
        continue;
      }
      double mag = std::abs(step);
      if (mag > radius) {  // damping: never jump past the root bound
        step *= radius / mag;
        mag = radius;
      }
      z -= step;
      max_move = std::max(max_move, mag);
    }

    for (const cd& z : rs.roots) max_mag = std::max(max_mag, std::abs(z));
    rs.iterations = iter;
    if (all_at_floor || max_move < opt.move_tol ||
        max_move < 16.0 * kEps * (1.0 + max_mag)) {
      settled = true;
      break;
    }
  }

  rs.residuals.resize(static_cast<std::size_t>(n));
  const double residual_bound = opt.residual_bound_factor * (1.0 + max_coeff);
  bool residuals_ok = true;
  for (int k = 0; k < n; ++k) {
    double r = std::abs(eval_full(c, rs.roots[static_cast<std::size_t>(k)]).value);
    rs.residuals[static_cast<std::size_t>(k)] = r;
    if (!(r <= residual_bound)) residuals_ok = false;
  }
  rs.converged = settled && residuals_ok;
  return rs;
}

double spectral_abscissa(const ComplexPolynomial& p, const OracleOptions& opt) {
  RootSet rs = all_roots(p, opt);
  if (!rs.converged)
    throw OracleDivergence("root iteration did not converge within " +
                           std::to_string(opt.max_iterations) + " sweeps");
  double a = -std::numeric_limits<double>::infinity();
  for (const auto& z : rs.roots) a = std::max(a, z.real());
  return a;
}

StabilityVerdict oracle_verdict(const ComplexPolynomial& p, double margin,
                                const OracleOptions& opt) {
  StabilityVerdict v;
  RootSet rs = all_roots(p, opt);
  if (!rs.converged) {
    v.status = Stability::Inconclusive;
    return v;
  }
  double a = -std::numeric_limits<double>::infinity();
  for (const auto& z : rs.roots) a = std::max(a, z.real());
  if (a < -margin) {
    v.status = Stability::Hurwitz;
  } else if (a > margin) {
    v.status = Stability::NotHurwitz;
  } else {
    v.status = Stability::Inconclusive;
  }
  return v;
}

}  // namespace grh
