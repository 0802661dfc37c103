// grh: stability toolkit for complex-coefficient polynomials.
//
// Subcommands: check, table, shaft, sweep, simulate. JSON goes to stdout,
// diagnostics to stderr, CSV/SVG to files. Exit codes: 0 hurwitz/success,
// 1 not_hurwitz, 2 inconclusive, 64 usage error, 65 input/output error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "grh/classical.hpp"
#include "grh/json_io.hpp"
#include "grh/root_oracle.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int verdict_exit(const grh::StabilityVerdict& v) {
  switch (v.status) {
    case grh::Stability::Hurwitz:
      return 0;
    case grh::Stability::NotHurwitz:
      return 1;
    default:
      return 2;
  }
}

grh::NumberMode mode_from_flag(const std::string& mode) {
  if (mode == "exact") return grh::NumberMode::ForceExact;
  if (mode == "float") return grh::NumberMode::ForceFloat;
  return grh::NumberMode::Auto;
}

struct CheckArgs {
  std::string coeffs;
  std::string leading;
  std::string mode = "auto";
  double tol = grh::kDefaultSignTol;
  std::string xi;
};

grh::ComplexPolynomial polynomial_from_args(const CheckArgs& a) {
  grh::NumberMode mode = mode_from_flag(a.mode);
  grh::ComplexPolynomial p = grh::parse_polynomial_list(a.coeffs, mode);
  if (!a.leading.empty()) {
    grh::Complex lead = grh::parse_complex(a.leading, mode);
    p = grh::monicize(lead, p.coeffs());
  }
  if (!a.xi.empty()) {
    grh::HalfPlaneBound bound{grh::parse_scalar(a.xi, mode)};
    p = grh::shift_argument(p, bound);
  }
  return p;
}

int run_check(const CheckArgs& a, bool full_table) {
  grh::ComplexPolynomial p = polynomial_from_args(a);
  grh::RHTable t =
      grh::build_table(p, {.short_circuit = !full_table, .sign_tol = a.tol});
  std::cout << grh::table_json(t).dump(2) << "\n";
  return verdict_exit(t.verdict);
}

struct ShaftArgs {
  std::string k, omega, big_omega, kp, ki;
  bool oracle = false;
  double tol = grh::kDefaultSignTol;
};

grh::ShaftParams shaft_params(const ShaftArgs& a) {
  grh::ShaftParams p;
  p.k = grh::parse_scalar(a.k);
  p.omega = grh::parse_scalar(a.omega);
  p.big_omega = grh::parse_scalar(a.big_omega);
  p.kp = grh::parse_scalar(a.kp);
  p.ki = grh::parse_scalar(a.ki);
  return p;
}

int run_shaft(const ShaftArgs& a) {
  grh::ShaftParams params = shaft_params(a);
  grh::ComplexPolynomial q = grh::characteristic_polynomial(params);
  auto conditions = grh::shaft_conditions(params);
  grh::StabilityVerdict v = grh::hurwitz_verdict(q, a.tol);

  grh::Json j = grh::shaft_json(params, q, conditions, v);
  grh::RootSet rs = grh::all_roots(q);
  if (rs.converged) {
    double abscissa = rs.roots[0].real();
    for (const auto& z : rs.roots) abscissa = std::max(abscissa, z.real());
    j["abscissa"] = abscissa;
  } else {
    j["abscissa"] = nullptr;
  }
  if (a.oracle) {
    grh::Json roots = grh::Json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      roots.push_back(grh::Json{{"re", rs.roots[i].real()},
                                {"im", rs.roots[i].imag()},
                                {"residual", rs.residuals[i]}});
    }
    j["oracle"] = grh::Json{{"converged", rs.converged},
                            {"iterations", rs.iterations},
                            {"roots", roots}};
  }
  std::cout << j.dump(2) << "\n";
  return verdict_exit(v);
}

bool parse_range(const std::string& text, std::pair<double, double>& out) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    out.first = std::stod(text.substr(0, colon));
    out.second = std::stod(text.substr(colon + 1));
  } catch (...) {
    return false;
  }
  return true;
}

bool parse_resolution(const std::string& text, int& nx, int& ny) {
  auto x = text.find('x');
  if (x == std::string::npos) x = text.find('X');
  if (x == std::string::npos) return false;
  try {
    nx = std::stoi(text.substr(0, x));
    ny = std::stoi(text.substr(x + 1));
  } catch (...) {
    return false;
  }
  return true;
}

struct SweepArgs {
  std::string k, omega, big_omega;
  std::string ki_range = "-5:0", kp_range = "-20:5";
  std::string res = "200x200";
  std::string out_csv;
  std::string out_svg;
  double margin = 1e-6;
};

int run_sweep(const SweepArgs& a) {
  std::pair<double, double> ki_range, kp_range;
  int ki_res = 0, kp_res = 0;
  if (!parse_range(a.ki_range, ki_range) || !parse_range(a.kp_range, kp_range)) {
    std::cerr << "grh: ranges must look like lo:hi\n";
    return kExitUsage;
  }
  if (!parse_resolution(a.res, ki_res, kp_res) || ki_res < 2 || kp_res < 2) {
    std::cerr << "grh: resolution must be NxM with N, M >= 2\n";
    return kExitUsage;
  }
  grh::ShaftParams base;
  base.k = grh::parse_scalar(a.k);
  base.omega = grh::parse_scalar(a.omega);
  base.big_omega = grh::parse_scalar(a.big_omega);

  grh::GainGrid grid = grh::sweep_grid(base, ki_range, kp_range, ki_res, kp_res);

  std::ofstream csv(a.out_csv);
  if (!csv) {
    std::cerr << "grh: cannot open output file " << a.out_csv << "\n";
    return kExitData;
  }
  grh::write_grid_csv(grid, csv);
  if (!csv.flush()) {
    std::cerr << "grh: failed writing " << a.out_csv << "\n";
    return kExitData;
  }
  if (!a.out_svg.empty()) {
    std::ofstream svg(a.out_svg);
    if (!svg) {
      std::cerr << "grh: cannot open output file " << a.out_svg << "\n";
      return kExitData;
    }
    grh::write_grid_svg(grid, svg, a.margin);
  }
  grh::GridSummary s = grh::summarize(grid, a.margin);
  grh::Json j{{"cells", static_cast<long>(grid.cells.size())},
              {"stable", s.stable},
              {"unstable", s.unstable},
              {"boundary", s.boundary},
              {"csv", a.out_csv}};
  if (!a.out_svg.empty()) j["svg"] = a.out_svg;
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct SimulateArgs {
  std::string k, omega, big_omega, kp, ki;
  std::string x_ref = "0";
  std::string x0 = "0", v0 = "0", l0 = "0";
  double horizon = 60.0;
  double dt = 0.01;
  std::string out_csv;
};

int run_simulate(const SimulateArgs& a) {
  grh::ShaftParams params;
  params.k = grh::parse_scalar(a.k);
  params.omega = grh::parse_scalar(a.omega);
  params.big_omega = grh::parse_scalar(a.big_omega);
  params.kp = grh::parse_scalar(a.kp);
  params.ki = grh::parse_scalar(a.ki);
  params.x_ref = grh::parse_complex(a.x_ref).to_std();

  grh::Trajectory tr;
  try {
    tr = grh::simulate_closed_loop(params, grh::parse_complex(a.x0).to_std(),
                                   grh::parse_complex(a.v0).to_std(),
                                   grh::parse_complex(a.l0).to_std(), a.horizon, a.dt);
  } catch (const grh::SimulationDivergence& e) {
    std::cerr << "grh: " << e.what() << "\n";
    return 1;
  }
  if (tr.dt_warning)
    std::cerr << "grh: warning: dt * spectral radius > 1, integration may be"
                 " unstable\n";

  if (!a.out_csv.empty()) {
    std::ofstream csv(a.out_csv);
    if (!csv) {
      std::cerr << "grh: cannot open output file " << a.out_csv << "\n";
      return kExitData;
    }
    grh::write_trajectory_csv(tr, csv);
  }
  const auto& last = tr.state.back();
  grh::Json j{{"t_final", tr.t.back()},
              {"x1", grh::Json{{"re", last[0].real()}, {"im", last[0].imag()}}},
              {"x2", grh::Json{{"re", last[1].real()}, {"im", last[1].imag()}}},
              {"l", grh::Json{{"re", last[2].real()}, {"im", last[2].imag()}}},
              {"regulation_error", std::abs(last[0] - params.x_ref)},
              {"dt_warning", tr.dt_warning}};
  if (!a.out_csv.empty()) j["csv"] = a.out_csv;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of complex-coefficient polynomials via the"
               " generalized Routh-Hurwitz table"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Decide whether all roots lie in the open left half-plane");
  check->add_option("--coeffs", check_args.coeffs,
                    "Comma-separated coefficients, descending powers, monic implied")
      ->required();
  check->add_option("--leading", check_args.leading,
                    "Leading coefficient for non-monic input");
  check->add_option("--mode", check_args.mode, "Arithmetic regime")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  check->add_option("--tol", check_args.tol, "Relative sign tolerance (float mode)");
  check->add_option("--xi", check_args.xi, "Test against Re(s) < xi instead of 0");

  CheckArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Print the full table, no short-circuit");
  table->add_option("--coeffs", table_args.coeffs, "Comma-separated coefficients")
      ->required();
  table->add_option("--leading", table_args.leading, "Leading coefficient");
  table->add_option("--mode", table_args.mode, "Arithmetic regime")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  table->add_option("--tol", table_args.tol, "Relative sign tolerance (float mode)");
  table->add_option("--xi", table_args.xi, "Test against Re(s) < xi instead of 0");

  ShaftArgs shaft_args;
  CLI::App* shaft = app.add_subcommand(
      "shaft", "PI-controlled rotating shaft: conditions and verdict");
  shaft->add_option("--k", shaft_args.k, "Damping coefficient")->required();
  shaft->add_option("--omega", shaft_args.omega, "Undamped frequency")->required();
  shaft->add_option("--big-omega", shaft_args.big_omega, "Angular velocity")->required();
  shaft->add_option("--kp", shaft_args.kp, "Proportional gain")->required();
  shaft->add_option("--ki", shaft_args.ki, "Integral gain")->required();
  shaft->add_flag("--oracle", shaft_args.oracle, "Include root-finder details");
  shaft->add_option("--tol", shaft_args.tol, "Relative sign tolerance");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Stability map over the gain plane");
  sweep->add_option("--k", sweep_args.k, "Damping coefficient")->required();
  sweep->add_option("--omega", sweep_args.omega, "Undamped frequency")->required();
  sweep->add_option("--big-omega", sweep_args.big_omega, "Angular velocity")->required();
  sweep->add_option("--ki-range", sweep_args.ki_range, "Integral-gain range lo:hi");
  sweep->add_option("--kp-range", sweep_args.kp_range, "Proportional-gain range lo:hi");
  sweep->add_option("--res", sweep_args.res, "Grid resolution NxM");
  sweep->add_option("--out", sweep_args.out_csv, "Output CSV path")->required();
  sweep->add_option("--svg", sweep_args.out_svg, "Optional SVG heatmap path");
  sweep->add_option("--margin", sweep_args.margin, "Boundary band on the abscissa");

  SimulateArgs sim_args;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Integrate the closed loop and report x1");
  simulate->add_option("--k", sim_args.k, "Damping coefficient")->required();
  simulate->add_option("--omega", sim_args.omega, "Undamped frequency")->required();
  simulate->add_option("--big-omega", sim_args.big_omega, "Angular velocity")->required();
  simulate->add_option("--kp", sim_args.kp, "Proportional gain")->required();
  simulate->add_option("--ki", sim_args.ki, "Integral gain")->required();
  simulate->add_option("--x-ref", sim_args.x_ref, "Reference position (complex)");
  simulate->add_option("--x0", sim_args.x0, "Initial position");
  simulate->add_option("--v0", sim_args.v0, "Initial velocity");
  simulate->add_option("--l0", sim_args.l0, "Initial integral state");
  simulate->add_option("--horizon", sim_args.horizon, "Integration horizon");
  simulate->add_option("--dt", sim_args.dt, "Step size");
  simulate->add_option("--out", sim_args.out_csv, "Trajectory CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_args, /*full_table=*/false);
    if (table->parsed()) return run_check(table_args, /*full_table=*/true);
    if (shaft->parsed()) return run_shaft(shaft_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (simulate->parsed()) return run_simulate(sim_args);
  } catch (const grh::ParseError& e) {
    std::cerr << "grh: " << e.what() << "\n";
    return kExitData;
  } catch (const grh::Error& e) {
    std::cerr << "grh: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
