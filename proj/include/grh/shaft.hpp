#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "grh/complex_poly.hpp"
#include "grh/verdict.hpp"

namespace grh {

// Rotating-shaft plant x'' + (2k*omega + 2i*Omega) x' + (omega^2 - Omega^2) x = f
// under the PI law f = kp (x - x_ref) + ki * l, l' = x - x_ref.
struct ShaftParams {
  Scalar k;          // damping coefficient
  Scalar omega;      // undamped oscillation frequency
  Scalar big_omega;  // angular velocity
  Scalar kp;         // proportional gain
  Scalar ki;         // integral gain
  std::complex<double> x_ref{0.0, 0.0};
};

// State (x1, x2, l) = (x, x', l): dx/dt = A x - (0, kp*x_ref, x_ref).
struct ClosedLoopModel {
  std::array<std::array<Complex, 3>, 3> matrix;
  std::array<std::complex<double>, 3> forcing;
  ShaftParams params;

  static ClosedLoopModel from_params(const ShaftParams& p);

  // det(sI - A) expanded via trace, principal minors and determinant; an
  // algebraic route independent of the closed-form coefficients.
  ComplexPolynomial characteristic_from_matrix() const;
};

// s^3 + (2k*omega + 2i*Omega) s^2 + (omega^2 - Omega^2 - kp) s - ki,
// cross-checked against the matrix route on every call.
ComplexPolynomial characteristic_polynomial(const ShaftParams& p);

// The three gain conditions; the gains stabilize exactly when all are
// positive. Their signs match the pivot chain of the characteristic
// polynomial (pivot 3 carries the extra positive factor 4 k^2 omega^2).
std::array<Scalar, 3> shaft_conditions(const ShaftParams& p);

struct GainCell {
  StabilityVerdict verdict;            // generalized-criterion verdict
  std::array<double, 3> conditions{};  // condition values at the cell
  double abscissa = 0.0;               // oracle spectral abscissa
  bool oracle_ok = false;
};

struct GainGrid {
  std::vector<double> ki_axis, kp_axis;
  std::vector<GainCell> cells;  // ki outer, kp inner

  const GainCell& at(std::size_t i, std::size_t j) const {
    return cells[i * kp_axis.size() + j];
  }
};

// Lattice sweep of the gain plane. Each axis takes `resolution` evenly
// spaced samples over its range; a degenerate range (lo == hi) collapses to
// the single sample. Oracle non-convergence leaves the cell's abscissa NaN.
GainGrid sweep_grid(const ShaftParams& base, std::pair<double, double> ki_range,
                    std::pair<double, double> kp_range, int ki_resolution,
                    int kp_resolution);

enum class CellClass { Stable, Unstable, Boundary };

// Boundary when a condition is exactly zero or the abscissa sits inside the
// margin band (or the oracle failed); otherwise stable iff all conditions
// are positive.
CellClass classify_cell(const GainCell& cell, double margin);

struct GridSummary {
  long stable = 0, unstable = 0, boundary = 0;
};
GridSummary summarize(const GainGrid& grid, double margin);

class SimulationDivergence : public Error {
 public:
  SimulationDivergence(const std::string& what, double time)
      : Error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<std::array<std::complex<double>, 3>> state;  // (x1, x2, l)
  // dt * spectral radius of A exceeded 1; the explicit integrator may be
  // outside its stability region.
  bool dt_warning = false;
};

// Classical fourth-order Runge-Kutta on the affine closed loop. Throws
// SimulationDivergence at the first non-finite state.
Trajectory simulate_closed_loop(const ShaftParams& params, std::complex<double> x0,
                                std::complex<double> v0, std::complex<double> l0,
                                double horizon, double dt);

// Fixed point (x_ref, 0, l*) of the affine system; requires ki != 0.
std::array<std::complex<double>, 3> equilibrium_state(const ShaftParams& params);

// CSV: header ki,kp,cond1,cond2,cond3,verdict,abscissa; one row per cell,
// kp fastest.
void write_grid_csv(const GainGrid& grid, std::ostream& out);

// Three-color cell map: stable / unstable / boundary.
void write_grid_svg(const GainGrid& grid, std::ostream& out, double margin);

void write_trajectory_csv(const Trajectory& tr, std::ostream& out);

}  // namespace grh
