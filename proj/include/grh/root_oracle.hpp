#pragma once

#include <complex>
#include <vector>

#include "grh/complex_poly.hpp"
#include "grh/verdict.hpp"

namespace grh {

class OracleDivergence : public Error {
 public:
  using Error::Error;
};

struct RootSet {
  std::vector<std::complex<double>> roots;  // n roots, with multiplicity
  std::vector<double> residuals;            // |q(root)| per root
  bool converged = false;
  int iterations = 0;
};

struct OracleOptions {
  double move_tol = 1e-13;  // stop when the largest root update is below this
  int max_iterations = 500;
  // converged additionally requires every residual <= factor * (1 + max |coeff|)
  double residual_bound_factor = 1e-8;
};

// Aberth-Ehrlich simultaneous iteration, started on a circle of radius
// 1 + max |coefficient| with per-root step damping. Non-convergence is
// reported, not thrown: the roots of an unconverged set are untrustworthy.
RootSet all_roots(const ComplexPolynomial& p, const OracleOptions& opt = {});

// Largest real part over all roots. Throws OracleDivergence when the
// iteration did not converge.
double spectral_abscissa(const ComplexPolynomial& p, const OracleOptions& opt = {});

// Hurwitz when the abscissa is below -margin, NotHurwitz above +margin,
// Inconclusive inside the band or on non-convergence.
StabilityVerdict oracle_verdict(const ComplexPolynomial& p, double margin = 1e-7,
                                const OracleOptions& opt = {});

}  // namespace grh
