#include "grh/shaft.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "grh/rh_table.hpp"
#include "grh/root_oracle.hpp"

namespace grh {

namespace {

using cd = std::complex<double>;

bool params_exact(const ShaftParams& p) {
  return p.k.exact() && p.omega.exact() && p.big_omega.exact() && p.kp.exact() &&
         p.ki.exact();
}

bool close(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a == b;
  double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) <= 1e-12 * (1.0 + std::abs(x) + std::abs(y));
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ClosedLoopModel ClosedLoopModel::from_params(const ShaftParams& p) {
  const bool ex = params_exact(p);
  const Scalar zero = Scalar::zero(ex);
  const Scalar one = Scalar::one(ex);
  const Scalar two = ex ? Scalar(2) : Scalar::of_double(2.0);

  ClosedLoopModel m;
  m.params = p;
  const Complex z{zero, zero};
  m.matrix = {{{z, Complex{one, zero}, z},
               {Complex{p.kp + p.big_omega * p.big_omega - p.omega * p.omega, zero},
                Complex{-(two * p.k * p.omega), -(two * p.big_omega)},
                Complex{p.ki, zero}},
               {Complex{one, zero}, z, z}}};
  m.forcing = {cd{0.0, 0.0}, p.kp.to_double() * p.x_ref, p.x_ref};
  return m;
}

ComplexPolynomial ClosedLoopModel::characteristic_from_matrix() const {
  const auto& A = matrix;
  Complex tr = A[0][0] + A[1][1] + A[2][2];
  Complex minors = (A[1][1] * A[2][2] - A[1][2] * A[2][1]) +
                   (A[0][0] * A[2][2] - A[0][2] * A[2][0]) +
                   (A[0][0] * A[1][1] - A[0][1] * A[1][0]);
  Complex det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  return ComplexPolynomial({-tr, minors, -det});
}

ComplexPolynomial characteristic_polynomial(const ShaftParams& p) {
  const bool ex = params_exact(p);
  const Scalar zero = Scalar::zero(ex);
  const Scalar two = ex ? Scalar(2) : Scalar::of_double(2.0);

  ComplexPolynomial direct({
      Complex{two * p.k * p.omega, two * p.big_omega},
      Complex{p.omega * p.omega - p.big_omega * p.big_omega - p.kp, zero},
      Complex{-p.ki, zero},
  });

  ComplexPolynomial via_matrix =
      ClosedLoopModel::from_params(p).characteristic_from_matrix();
  for (int j = 1; j <= 3; ++j) {
    if (!close(direct.coeff(j).re, via_matrix.coeff(j).re) ||
        !close(direct.coeff(j).im, via_matrix.coeff(j).im))
      throw Error("characteristic polynomial disagrees with det(sI - A)");
  }
  return direct;
}

std::array<Scalar, 3> shaft_conditions(const ShaftParams& p) {
  const bool ex = params_exact(p);
  const Scalar two = ex ? Scalar(2) : Scalar::of_double(2.0);
  const Scalar eight = ex ? Scalar(8) : Scalar::of_double(8.0);

  const Scalar tkw = two * p.k * p.omega;  // 2 k omega
  const Scalar inner =
      tkw * (p.omega * p.omega - p.big_omega * p.big_omega - p.kp) + p.ki;
  const Scalar cond3 = -(eight * p.ki * p.ki * p.k * p.omega * p.big_omega * p.big_omega) -
                       p.ki * inner * inner;
  return {tkw, tkw * inner, cond3};
}

GainGrid sweep_grid(const ShaftParams& base, std::pair<double, double> ki_range,
                    std::pair<double, double> kp_range, int ki_resolution,
                    int kp_resolution) {
  if (ki_resolution < 2 || kp_resolution < 2)
    throw DegenerateInput("sweep resolution must be at least 2 per axis");
  if (!(ki_range.first <= ki_range.second) || !(kp_range.first <= kp_range.second))
    throw DegenerateInput("sweep ranges must be ordered");

  auto linspace = [](std::pair<double, double> r, int res) {
    std::vector<double> v;
    if (r.first == r.second) {
      v.push_back(r.first);
      return v;
    }
    v.reserve(static_cast<std::size_t>(res));
    for (int i = 0; i < res; ++i)
      v.push_back(r.first + (r.second - r.first) * i / (res - 1));
    return v;
  };

  GainGrid grid;
  grid.ki_axis = linspace(ki_range, ki_resolution);
  grid.kp_axis = linspace(kp_range, kp_resolution);
  grid.cells.reserve(grid.ki_axis.size() * grid.kp_axis.size());

  for (double ki : grid.ki_axis) {
    for (double kp : grid.kp_axis) {
      ShaftParams p = base;
      p.ki = Scalar::of_double(ki);
      p.kp = Scalar::of_double(kp);

      GainCell cell;
      auto conds = shaft_conditions(p);
      for (int c = 0; c < 3; ++c)
        cell.conditions[static_cast<std::size_t>(c)] =
            conds[static_cast<std::size_t>(c)].to_double();

      ComplexPolynomial q = characteristic_polynomial(p);
      cell.verdict = hurwitz_verdict(q);

      RootSet rs = all_roots(q);
      cell.oracle_ok = rs.converged;
      if (rs.converged) {
        double a = rs.roots[0].real();
        for (const cd& z : rs.roots) a = std::max(a, z.real());
        cell.abscissa = a;
      } else {
        cell.abscissa = std::numeric_limits<double>::quiet_NaN();
      }
      grid.cells.push_back(cell);
    }
  }
  return grid;
}

CellClass classify_cell(const GainCell& cell, double margin) {
  for (double c : cell.conditions)
    if (c == 0.0) return CellClass::Boundary;
  if (!cell.oracle_ok || std::abs(cell.abscissa) <= margin) return CellClass::Boundary;
  bool all_pos = true;
  for (double c : cell.conditions) all_pos = all_pos && c > 0.0;
  return all_pos ? CellClass::Stable : CellClass::Unstable;
}

GridSummary summarize(const GainGrid& grid, double margin) {
  GridSummary s;
  for (const GainCell& cell : grid.cells) {
    switch (classify_cell(cell, margin)) {
      case CellClass::Stable:
        ++s.stable;
        break;
      case CellClass::Unstable:
        ++s.unstable;
        break;
      default:
        ++s.boundary;
    }
  }
  return s;
}

Trajectory simulate_closed_loop(const ShaftParams& params, cd x0, cd v0, cd l0,
                                double horizon, double dt) {
  if (!(horizon > 0.0) || !(dt > 0.0))
    throw DegenerateInput("simulation horizon and dt must be positive");

  ClosedLoopModel model = ClosedLoopModel::from_params(params);
  std::array<std::array<cd, 3>, 3> A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          model.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_std();
  const std::array<cd, 3>& b = model.forcing;

  auto deriv = [&](const std::array<cd, 3>& y) {
    std::array<cd, 3> d;
    for (int i = 0; i < 3; ++i) {
      cd acc = -b[static_cast<std::size_t>(i)];
      for (int j = 0; j < 3; ++j)
        acc += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               y[static_cast<std::size_t>(j)];
      d[static_cast<std::size_t>(i)] = acc;
    }
    return d;
  };

  Trajectory tr;
  // Spectral radius check for the explicit step.
  RootSet rs = all_roots(characteristic_polynomial(params));
  if (rs.converged) {
    double rho = 0.0;
    for (const cd& z : rs.roots) rho = std::max(rho, std::abs(z));
    tr.dt_warning = dt * rho > 1.0;
  }

  long long steps = std::llround(horizon / dt);
  if (steps < 1) steps = 1;

  std::array<cd, 3> y{x0, v0, l0};
  tr.t.reserve(static_cast<std::size_t>(steps) + 1);
  tr.state.reserve(static_cast<std::size_t>(steps) + 1);
  tr.t.push_back(0.0);
  tr.state.push_back(y);

  for (long long s = 1; s <= steps; ++s) {
    auto k1 = deriv(y);
    std::array<cd, 3> y2, y3, y4;
    for (int i = 0; i < 3; ++i)
      y2[static_cast<std::size_t>(i)] =
          y[static_cast<std::size_t>(i)] + 0.5 * dt * k1[static_cast<std::size_t>(i)];
    auto k2 = deriv(y2);
    for (int i = 0; i < 3; ++i)
      y3[static_cast<std::size_t>(i)] =
          y[static_cast<std::size_t>(i)] + 0.5 * dt * k2[static_cast<std::size_t>(i)];
    auto k3 = deriv(y3);
    for (int i = 0; i < 3; ++i)
      y4[static_cast<std::size_t>(i)] =
          y[static_cast<std::size_t>(i)] + dt * k3[static_cast<std::size_t>(i)];
    auto k4 = deriv(y4);
    for (int i = 0; i < 3; ++i) {
      auto u = static_cast<std::size_t>(i);
      y[u] += dt / 6.0 * (k1[u] + 2.0 * k2[u] + 2.0 * k3[u] + k4[u]);
    }
    double tnow = static_cast<double>(s) * dt;
    for (const cd& c : y) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw SimulationDivergence(
            "state became non-finite at t = " + fmt_double(tnow), tnow);
    }
    tr.t.push_back(tnow);
    tr.state.push_back(y);
  }
  return tr;
}

std::array<cd, 3> equilibrium_state(const ShaftParams& params) {
  if (params.ki.is_zero())
    throw DegenerateInput("equilibrium needs a nonzero integral gain");
  double w2 = params.omega.to_double() * params.omega.to_double();
  double W2 = params.big_omega.to_double() * params.big_omega.to_double();
  cd lstar = params.x_ref * (w2 - W2) / params.ki.to_double();
  return {params.x_ref, cd{0.0, 0.0}, lstar};
}

void write_grid_csv(const GainGrid& grid, std::ostream& out) {
  out << "ki,kp,cond1,cond2,cond3,verdict,abscissa\n";
  for (std::size_t i = 0; i < grid.ki_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.kp_axis.size(); ++j) {
      const GainCell& c = grid.at(i, j);
      out << fmt_double(grid.ki_axis[i]) << ',' << fmt_double(grid.kp_axis[j]) << ','
          << fmt_double(c.conditions[0]) << ',' << fmt_double(c.conditions[1]) << ','
          << fmt_double(c.conditions[2]) << ',' << to_string(c.verdict.status) << ','
          << fmt_double(c.abscissa) << '\n';
    }
  }
}

void write_grid_svg(const GainGrid& grid, std::ostream& out, double margin) {
  const std::size_t nx = grid.ki_axis.size();
  const std::size_t ny = grid.kp_axis.size();
  const double plot_w = 640.0, plot_h = 640.0, pad = 48.0;
  const double cw = plot_w / static_cast<double>(nx);
  const double ch = plot_h / static_cast<double>(ny);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot_w + 2 * pad
      << "\" height=\"" << plot_h + 2 * pad << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const char* color = nullptr;
      switch (classify_cell(grid.at(i, j), margin)) {
        case CellClass::Stable:
          color = "#f5c542";
          break;
        case CellClass::Unstable:
          color = "#2b5fad";
          break;
        default:
          color = "#9aa0a6";
      }
      // kp grows upward
      double x = pad + static_cast<double>(i) * cw;
      double y = pad + plot_h - static_cast<double>(j + 1) * ch;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw + 0.5
          << "\" height=\"" << ch + 0.5 << "\" fill=\"" << color << "\"/>\n";
    }
  }
  out << "<text x=\"" << pad << "\" y=\"" << pad + plot_h + 32
      << "\" font-size=\"13\">ki: " << fmt_double(grid.ki_axis.front()) << " .. "
      << fmt_double(grid.ki_axis.back()) << "</text>\n";
  out << "<text x=\"8\" y=\"" << pad - 16 << "\" font-size=\"13\">kp: "
      << fmt_double(grid.kp_axis.front()) << " .. " << fmt_double(grid.kp_axis.back())
      << "</text>\n";
  out << "</svg>\n";
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& out) {
  out << "t,x1_re,x1_im,x2_re,x2_im,l_re,l_im\n";
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    const auto& s = tr.state[i];
    out << fmt_double(tr.t[i]) << ',' << fmt_double(s[0].real()) << ','
        << fmt_double(s[0].imag()) << ',' << fmt_double(s[1].real()) << ','
        << fmt_double(s[1].imag()) << ',' << fmt_double(s[2].real()) << ','
        << fmt_double(s[2].imag()) << '\n';
  }
}

}  // namespace grh
