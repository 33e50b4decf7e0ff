#include "dqca/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "dqca/errors.hpp"
#include "dqca/evolve.hpp"
#include "dqca/gates.hpp"
#include "dqca/io.hpp"
#include "dqca/manybody.hpp"
#include "dqca/params.hpp"
#include "dqca/pathsum.hpp"
#include "dqca/spectral.hpp"

namespace dqca::cli {

namespace {

using cd = std::complex<double>;

void emit_data(const RunConfig& cfg, const std::string& csv,
               const std::string& json, std::ostream& out) {
  const std::string& payload = (cfg.format == OutputFormat::csv) ? csv : json;
  if (cfg.out_path.empty()) {
    out << payload;
  } else {
    write_text_file(cfg.out_path, payload);
  }
}

double default_tolerance(const RunConfig& cfg, double fallback) {
  return cfg.tolerance >= 0.0 ? cfg.tolerance : fallback;
}

std::string matrix_line(const Eigen::Matrix2cd& m, int row) {
  auto fmt = [](cd v) {
    return "(" + format_float17(v.real()) + ", " + format_float17(v.imag()) +
           ")";
  };
  return "[ " + fmt(m(row, 0)) + "  " + fmt(m(row, 1)) + " ]";
}

FieldState random_state(std::mt19937_64& rng, int n_cells) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FieldState s = FieldState::zero(n_cells);
  for (int i = 0; i < n_cells; ++i) {
    s.plus[i] = cd{gauss(rng), gauss(rng)};
    s.minus[i] = cd{gauss(rng), gauss(rng)};
  }
  const double norm = s.norm();
  s.plus /= norm;
  s.minus /= norm;
  return s;
}

int finish_checks(const std::vector<NamedResidual>& residuals, double tol,
                  std::ostream& out) {
  double worst = 0.0;
  for (const auto& r : residuals) {
    out << "  " << r.name << " = " << format_float17(r.value)
        << (r.value <= tol ? "" : "  [FAIL]") << "\n";
    worst = std::max(worst, r.value);
  }
  out << (worst <= tol ? "OK" : "CHECK FAILED") << " (max residual "
      << format_float17(worst) << ", tolerance " << format_float17(tol)
      << ")\n";
  return worst <= tol ? kExitOk : kExitCheckFailed;
}

int run_gates(const RunConfig& cfg, std::ostream& out) {
  const SimulationParams params = params_from_mass_ratio(cfg.mu, 2);
  const GatePair gp = solve_gates(params);
  const GateIdentityReport report = verify_gate_identities(gp, params);
  out << "mu = " << format_float17(cfg.mu)
      << "  zeta = " << format_float17(params.zeta)
      << "  theta = " << format_float17(gp.theta) << "\n";
  out << "A = " << matrix_line(gp.A, 0) << "\n    " << matrix_line(gp.A, 1)
      << "\n";
  out << "B = " << matrix_line(gp.B, 0) << "\n    " << matrix_line(gp.B, 1)
      << "\n";
  if (!cfg.out_path.empty() || cfg.format == OutputFormat::json) {
    emit_data(cfg, residuals_csv(report.residuals),
              residuals_json("gate_identities", report.residuals), out);
  }
  return finish_checks(report.residuals, default_tolerance(cfg, 1e-10), out);
}

int run_zeta_curve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 2) {
    throw ParameterError("zeta-curve: need at least 2 samples");
  }
  std::vector<double> mu(cfg.samples);
  for (int i = 0; i < cfg.samples; ++i) {
    mu[i] = static_cast<double>(i) / (cfg.samples - 1);
  }
  const auto curve = zeta_curve(mu);
  emit_data(cfg, zeta_csv(curve), zeta_json(curve), out);
  if (!cfg.out_path.empty()) {
    out << "zeta curve: " << curve.size() << " samples from ("
        << format_float17(curve.front().mu) << ", "
        << format_float17(curve.front().zeta) << ") to ("
        << format_float17(curve.back().mu) << ", "
        << format_float17(curve.back().zeta) << ") -> " << cfg.out_path
        << "\n";
  }
  return kExitOk;
}

int run_dispersion(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k_points < 2) {
    throw ParameterError("dispersion: need at least 2 k points");
  }
  const SimulationParams params = params_from_mass_ratio(cfg.mu, cfg.k_points);
  const GatePair gp = solve_gates(params);
  const auto points = dispersion(gp, params, momentum_grid(params));
  emit_data(cfg, dispersion_csv(points), dispersion_json(points), out);
  double max_vg = 0.0, max_norm = 0.0;
  for (const auto& p : points) {
    max_vg = std::max(max_vg, p.group_velocity);
    max_norm = std::max(max_norm, p.hnorm);
  }
  const double c = params.units.c();
  if (!cfg.out_path.empty()) {
    out << "dispersion: " << points.size() << " k points -> " << cfg.out_path
        << "\n";
  }
  out << "max group velocity = " << format_float17(max_vg)
      << "  (zeta*c = " << format_float17(params.zeta * c) << ")\n"
      << "max ||H(k)|| = " << format_float17(max_norm)
      << "  (bound 1/(2 tau) = "
      << format_float17(1.0 / (2.0 * params.units.tau)) << ")\n";
  return kExitOk;
}

int run_evolve(const RunConfig& cfg, std::ostream& out) {
  const SimulationParams params = params_from_mass_ratio(cfg.mu, cfg.cells);
  const double center =
      cfg.packet_center >= 0.0 ? cfg.packet_center : cfg.cells / 2.0;
  const double sigma =
      cfg.packet_sigma >= 0.0 ? cfg.packet_sigma : cfg.cells / 10.0;
  FieldState state = gaussian_packet(params, center, sigma, cfg.packet_k0,
                                     cfg.mix_plus, cfg.mix_minus);
  const StepOperator op = make_step_operator(params);
  const auto samples = run_trajectory(state, op, cfg.two_steps);
  emit_data(cfg, trajectory_csv(samples), trajectory_json(samples), out);

  // Least-squares drift in cells per two-step; physical speed is that
  // times (2a)/(2tau).
  const size_t n = samples.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += i;
    sy += samples[i].mean_x;
    sxx += double(i) * i;
    sxy += i * samples[i].mean_x;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double speed = slope * params.units.a / params.units.tau;
  if (!cfg.out_path.empty()) {
    out << "trajectory: " << samples.size() << " samples -> " << cfg.out_path
        << "\n";
  }
  out << "drift speed = " << format_float17(speed)
      << "  (c = " << format_float17(params.units.c())
      << ", zeta*c = " << format_float17(params.zeta * params.units.c())
      << ")\n"
      << "norm drift = "
      << format_float17(std::abs(samples.back().norm - samples.front().norm))
      << "\n";
  return kExitOk;
}

int run_pathsum_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.cells < 2 || cfg.cells > kMaxPathCells) {
    throw ParameterError("pathsum-check: cells outside [2, " +
                         std::to_string(kMaxPathCells) + "]");
  }
  if (cfg.depth % 2 != 0) {
    throw ParameterError("pathsum-check: depth must be even");
  }
  if (cfg.draws < 1) {
    throw ParameterError("pathsum-check: draws must be >= 1");
  }
  const SimulationParams params = params_from_mass_ratio(cfg.mu, cfg.cells);
  const StepOperator op = make_step_operator(params);

  std::mt19937_64 rng(cfg.seed);
  double state_dev = 0.0;
  for (int d = 0; d < cfg.draws; ++d) {
    const FieldState initial = random_state(rng, cfg.cells);
    const FieldState by_paths = evolve_by_paths(initial, op, cfg.depth);
    FieldState reference = initial;
    for (int t = 0; t < cfg.depth / 2; ++t) advance_two_step(reference, op);
    state_dev = std::max(
        state_dev,
        std::max((by_paths.plus - reference.plus).cwiseAbs().maxCoeff(),
                 (by_paths.minus - reference.minus).cwiseAbs().maxCoeff()));
  }
  const Eigen::MatrixXcd fwd = forward_path_matrix(op, cfg.depth);
  const Eigen::MatrixXcd bwd = backward_path_matrix(op, cfg.depth);
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(2 * cfg.cells, 2 * cfg.cells);
  std::vector<NamedResidual> residuals = {
      {"path_vs_two_step", state_dev},
      {"forward_unitarity", (fwd.adjoint() * fwd - id).cwiseAbs().maxCoeff()},
      {"backward_forward_identity", (bwd * fwd - id).cwiseAbs().maxCoeff()},
  };
  if (!cfg.dump_paths_path.empty()) {
    std::vector<PathRecord> all;
    for (int w = 0; w < 2 * cfg.cells; ++w) {
      auto paths = enumerate_forward(op, w, cfg.depth);
      all.insert(all.end(), paths.begin(), paths.end());
    }
    write_text_file(cfg.dump_paths_path, paths_to_json(all));
    out << "dumped " << all.size() << " paths -> " << cfg.dump_paths_path
        << "\n";
  }
  return finish_checks(residuals, default_tolerance(cfg, 1e-10), out);
}

int run_manybody_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.q_cells < 2 || cfg.q_cells > kMaxCrosscheckCells) {
    throw ParameterError("manybody-check: q-cells outside [2, " +
                         std::to_string(kMaxCrosscheckCells) + "]");
  }
  const SimulationParams params =
      params_from_mass_ratio(cfg.mu, cfg.q_cells);
  const int q = 2 * cfg.q_cells;
  const FieldOperatorSet fields = build_jw_fields(q);

  // Canonical anticommutators; exhaustive below ten qubits, spot-checked
  // (diagonal, neighbors, seam) at ten where dense products get heavy.
  double car = 0.0;
  const Eigen::MatrixXcd id_op =
      Eigen::MatrixXcd::Identity(fields.dim(), fields.dim());
  auto car_pair = [&](int m, int n) {
    const auto& zm = fields.annihilators[m];
    const auto& zn = fields.annihilators[n];
    const Eigen::MatrixXcd mixed =
        zm * zn.adjoint() + zn.adjoint() * zm - (m == n ? 1.0 : 0.0) * id_op;
    const Eigen::MatrixXcd plain = zm * zn + zn * zm;
    car = std::max(car, std::max(mixed.cwiseAbs().maxCoeff(),
                                 plain.cwiseAbs().maxCoeff()));
  };
  if (q < 10) {
    for (int m = 0; m < q; ++m) {
      for (int n = m; n < q; ++n) car_pair(m, n);
    }
  } else {
    for (int m = 0; m < q; ++m) car_pair(m, m);
    for (int m = 0; m + 1 < q; ++m) car_pair(m, m + 1);
    car_pair(0, q - 1);
    car_pair(0, q / 2);
  }

  const RingGateSet ring = build_gate_unitaries(params, fields);
  const GatePair gp = solve_gates(params);
  const double heis_a =
      heisenberg_check(ring.a_ops[1], fields, 1, 2, gp.A);
  const double heis_b =
      heisenberg_check(ring.b_ops[0], fields, 0, 1, gp.B);
  const ConservationReport cons_a =
      conservation_checks(ring.a_ops[1], fields);
  const ConservationReport cons_b =
      conservation_checks(ring.b_ops[0], fields);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double fermi_dev = displacement_identity_check(cd{0.3, 0.4},
                                                 Statistics::fermi);
  for (int i = 0; i < 5; ++i) {
    fermi_dev = std::max(fermi_dev,
                         displacement_identity_check(cd{uni(rng), uni(rng)},
                                                     Statistics::fermi));
  }
  const double bose_dev =
      displacement_identity_check(cd{0.3, 0.4}, Statistics::bose, 8);

  const DenseOperator circuit = two_step_circuit_operator(fields, ring);
  const Eigen::VectorXcd vac = vacuum_state(q);
  const double circuit_vacuum = (circuit * vac - vac).norm();
  const double sector_dev = single_excitation_crosscheck(params, cfg.q_cells);

  struct Check {
    const char* name;
    double value;
    double tol;
  };
  const std::vector<Check> checks = {
      {"car", car, 1e-12},
      {"construction_field_vs_pauli", ring.construction_residual, 1e-12},
      {"heisenberg_a", heis_a, 1e-10},
      {"heisenberg_b", heis_b, 1e-10},
      {"number_commutator_a", cons_a.pauli_number_commutator, 1e-12},
      {"number_commutator_b", cons_b.pauli_number_commutator, 1e-12},
      {"vacuum_a", cons_a.vacuum_residual, 1e-12},
      {"vacuum_b", cons_b.vacuum_residual, 1e-12},
      {"number_affine_shift", cons_a.number_affine_residual, 1e-12},
      {"displacement_fermi", fermi_dev, 1e-12},
      {"displacement_bose", bose_dev, 1e-10},
      {"circuit_vacuum", circuit_vacuum, 1e-12},
      {"single_excitation_sector", sector_dev, 1e-10},
  };

  bool all_pass = true;
  std::string json = "{\n  \"schema\": \"manybody_report\",\n"
                     "  \"residuals\": {";
  std::string tols = "  \"tolerances\": {";
  std::string passes = "  \"pass\": {";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : c.tol;
    const bool pass = c.value <= tol;
    all_pass = all_pass && pass;
    const std::string sep = (i + 1 < checks.size()) ? ", " : "";
    json += std::string("\"") + c.name + "\": " + format_float17(c.value) +
            sep;
    tols += std::string("\"") + c.name + "\": " + format_float17(tol) + sep;
    passes += std::string("\"") + c.name + "\": " + (pass ? "true" : "false") +
              sep;
    out << "  " << c.name << " = " << format_float17(c.value)
        << (pass ? "" : "  [FAIL]") << "\n";
  }
  json += "},\n" + tols + "},\n" + passes + "},\n  \"all_pass\": " +
          (all_pass ? "true" : "false") + "\n}\n";
  if (!cfg.out_path.empty()) {
    write_text_file(cfg.out_path, json);
    out << "report -> " << cfg.out_path << "\n";
  }
  out << (all_pass ? "OK" : "CHECK FAILED") << "\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_bound_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k_points < 2) {
    throw ParameterError("bound-check: need at least 2 k points");
  }
  if (cfg.bound_n < 1) {
    throw ParameterError("bound-check: n must be >= 1");
  }
  const SimulationParams params = params_from_mass_ratio(cfg.mu, cfg.k_points);
  const GatePair gp = solve_gates(params);
  double max_norm = 0.0;
  for (double k : momentum_grid(params)) {
    max_norm = std::max(
        max_norm, operator_norm_2x2(extract_hamiltonian(gp, k, params.units)));
  }
  const BoundCheckResult r = simulability_bound_check(
      max_norm, cfg.bound_n, params.units.tau, default_tolerance(cfg, 1e-12));
  out << "max ||H(k)|| = " << format_float17(r.h_gate_norm) << "\n"
      << "bound 1/(n tau) = " << format_float17(r.bound) << "\n"
      << "margin = " << format_float17(r.margin) << "\n"
      << (r.pass ? "OK" : "CHECK FAILED") << "\n";
  if (!cfg.out_path.empty() || cfg.format == OutputFormat::json) {
    std::vector<NamedResidual> rows = {
        {"max_hnorm", r.h_gate_norm},
        {"bound", r.bound},
        {"margin", r.margin},
    };
    emit_data(cfg, residuals_csv(rows), residuals_json("bound_check", rows),
              out);
  }
  return r.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::gates:
        return run_gates(config, out);
      case Command::zeta_curve:
        return run_zeta_curve(config, out);
      case Command::dispersion:
        return run_dispersion(config, out);
      case Command::evolve:
        return run_evolve(config, out);
      case Command::pathsum_check:
        return run_pathsum_check(config, out);
      case Command::manybody_check:
        return run_manybody_check(config, out);
      case Command::bound_check:
        return run_bound_check(config, out);
    }
    err << "error: unknown command\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const BudgetError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const DimensionError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  }
}

}  // namespace dqca::cli
