#include "dqca/manybody.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "dqca/errors.hpp"
#include "dqca/evolve.hpp"
#include "dqca/gates.hpp"

namespace dqca {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Matrix2cd sigma_minus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1.0;  // |empty><occupied|
  return m;
}

Eigen::Matrix2cd sigma_three() {
  // 2 n - I: empty -> -1, occupied -> +1.
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

// Product over sites of single-qubit factors; qubit 0 is the leftmost
// (most significant) factor.
Eigen::MatrixXcd site_product(int qubits,
                              const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int w = 0; w < qubits; ++w) out = kron(out, factors[w]);
  return out;
}

void check_qubits(int qubits, const char* where) {
  if (qubits < 2 || qubits > kMaxQubits) {
    throw BudgetError(std::string(where) + ": qubit count " +
                      std::to_string(qubits) + " outside [2, " +
                      std::to_string(kMaxQubits) + "]");
  }
}

void check_mode(const FieldOperatorSet& fields, int mode, const char* where) {
  if (mode < 0 || mode >= fields.qubits) {
    throw ParameterError(std::string(where) + ": mode index out of range");
  }
}

}  // namespace

FieldOperatorSet build_jw_fields(int qubits) {
  check_qubits(qubits, "build_jw_fields");
  FieldOperatorSet set;
  set.qubits = qubits;
  set.annihilators.reserve(qubits);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  for (int w = 0; w < qubits; ++w) {
    std::vector<Eigen::Matrix2cd> factors(qubits, id);
    for (int k = 0; k < w; ++k) factors[k] = sigma_three();
    factors[w] = sigma_minus();
    set.annihilators.push_back(site_product(qubits, factors));
  }
  return set;
}

Eigen::VectorXcd vacuum_state(int qubits) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1L << qubits);
  v[0] = 1.0;
  return v;
}

DenseOperator pauli_number_operator(int qubits) {
  const long dim = 1L << qubits;
  Eigen::VectorXcd diag(dim);
  for (long b = 0; b < dim; ++b) {
    const int occupied = std::popcount(static_cast<unsigned long>(b));
    diag[b] = cd(2.0 * occupied - qubits, 0.0);
  }
  return diag.asDiagonal();
}

DenseOperator mode_number_operator(const FieldOperatorSet& fields) {
  DenseOperator n = DenseOperator::Zero(fields.dim(), fields.dim());
  for (const auto& phi : fields.annihilators) n += phi.adjoint() * phi;
  return n;
}

DenseOperator hop_exponential_field(const FieldOperatorSet& fields, int mode_a,
                                    int mode_b, double angle) {
  check_mode(fields, mode_a, "hop_exponential_field");
  check_mode(fields, mode_b, "hop_exponential_field");
  if (mode_a == mode_b) {
    throw ParameterError("hop_exponential_field: modes must differ");
  }
  const DenseOperator& za = fields.annihilators[mode_a];
  const DenseOperator& zb = fields.annihilators[mode_b];
  const DenseOperator x = za.adjoint() * zb + zb.adjoint() * za;
  const DenseOperator x2 = x * x;
  return DenseOperator::Identity(fields.dim(), fields.dim()) +
         kI * std::sin(angle) * x + (std::cos(angle) - 1.0) * x2;
}

DenseOperator hop_exponential_pauli(int qubits, int mode_a, int mode_b,
                                    double angle) {
  check_qubits(qubits, "hop_exponential_pauli");
  const int lo = std::min(mode_a, mode_b);
  const int hi = std::max(mode_a, mode_b);
  if (lo < 0 || hi >= qubits || lo == hi) {
    throw ParameterError("hop_exponential_pauli: bad mode pair");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd sm = sigma_minus();
  const Eigen::Matrix2cd sp = sm.adjoint();
  std::vector<Eigen::Matrix2cd> factors(qubits, id);
  factors[lo] = sp;
  factors[hi] = sm;
  for (int k = lo + 1; k < hi; ++k) factors[k] = sigma_three();
  const Eigen::MatrixXcd term = site_product(qubits, factors);
  const Eigen::MatrixXcd exponent =
      -kI * angle * (term + term.adjoint().eval());
  return exponent.exp();
}

RingGateSet build_gate_unitaries(const SimulationParams& params,
                                 const FieldOperatorSet& fields) {
  const int q = fields.qubits;
  if (q % 2 != 0) {
    throw ParameterError("build_gate_unitaries: need two wires per cell");
  }
  const int n_cells = q / 2;
  const double half_pi = std::numbers::pi / 2.0;
  RingGateSet ring;
  double residual = 0.0;
  auto build = [&](int ma, int mb, double angle) {
    DenseOperator field_form = hop_exponential_field(fields, ma, mb, angle);
    DenseOperator pauli_form = hop_exponential_pauli(q, ma, mb, angle);
    residual =
        std::max(residual, (field_form - pauli_form).cwiseAbs().maxCoeff());
    return field_form;
  };
  for (int n = 0; n < n_cells; ++n) {
    ring.b_ops.push_back(build(2 * n, 2 * n + 1, half_pi));
    ring.a_ops.push_back(build((2 * n - 1 + q) % q, 2 * n, params.theta));
  }
  ring.construction_residual = residual;
  return ring;
}

double heisenberg_check(const DenseOperator& u, const FieldOperatorSet& fields,
                        int wire_a, int wire_b,
                        const Eigen::Matrix2cd& expected) {
  check_mode(fields, wire_a, "heisenberg_check");
  check_mode(fields, wire_b, "heisenberg_check");
  const double basis_norm = 0.5 * static_cast<double>(fields.dim());
  const int wires[2] = {wire_a, wire_b};
  double residual = 0.0;
  for (int i = 0; i < 2; ++i) {
    const DenseOperator moved =
        u * fields.annihilators[wires[i]] * u.adjoint();
    DenseOperator fitted = DenseOperator::Zero(fields.dim(), fields.dim());
    for (int j = 0; j < fields.qubits; ++j) {
      const cd coeff =
          (fields.annihilators[j].adjoint() * moved).trace() / basis_norm;
      fitted += coeff * fields.annihilators[j];
      if (j == wires[0] || j == wires[1]) {
        const int col = (j == wires[0]) ? 0 : 1;
        residual = std::max(residual, std::abs(coeff - expected(i, col)));
      } else {
        residual = std::max(residual, std::abs(coeff));
      }
    }
    residual = std::max(residual, (moved - fitted).cwiseAbs().maxCoeff());
  }
  return residual;
}

double spectral_norm(const DenseOperator& m) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(m.adjoint() * m,
                                                  Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

ConservationReport conservation_checks(const DenseOperator& u,
                                       const FieldOperatorSet& fields) {
  const DenseOperator n_pauli = pauli_number_operator(fields.qubits);
  const DenseOperator n_mode = mode_number_operator(fields);
  const Eigen::VectorXcd vac = vacuum_state(fields.qubits);
  ConservationReport rep;
  rep.pauli_number_commutator = spectral_norm(u * n_pauli - n_pauli * u);
  rep.mode_number_commutator = spectral_norm(u * n_mode - n_mode * u);
  rep.vacuum_residual = (u * vac - vac).norm();
  rep.number_affine_residual =
      (n_pauli - (2.0 * n_mode -
                  static_cast<double>(fields.qubits) *
                      DenseOperator::Identity(fields.dim(), fields.dim())))
          .cwiseAbs()
          .maxCoeff();
  rep.number_commute_residual =
      (n_pauli * n_mode - n_mode * n_pauli).cwiseAbs().maxCoeff();
  return rep;
}

namespace {

// exp(-K) for the fermionic displacement generator K = a z^dag z' - a* z'^dag z,
// which satisfies K^3 = -|a|^2 K.
DenseOperator fermi_displacement(const DenseOperator& k_gen, double mod_alpha,
                                 long dim) {
  if (mod_alpha == 0.0) return DenseOperator::Identity(dim, dim);
  const DenseOperator k2 = k_gen * k_gen;
  return DenseOperator::Identity(dim, dim) -
         (std::sin(mod_alpha) / mod_alpha) * k_gen +
         ((1.0 - std::cos(mod_alpha)) / (mod_alpha * mod_alpha)) * k2;
}

}  // namespace

double displacement_identity_check(std::complex<double> alpha,
                                   Statistics statistics, int bose_cutoff) {
  DenseOperator z, zp;
  long dim = 0;
  if (statistics == Statistics::fermi) {
    const FieldOperatorSet fields = build_jw_fields(2);
    z = fields.annihilators[0];
    zp = fields.annihilators[1];
    dim = fields.dim();
  } else {
    if (bose_cutoff < 4) {
      throw ParameterError(
          "displacement_identity_check: bose cutoff must be >= 4");
    }
    const int d = bose_cutoff;
    Eigen::MatrixXcd ladder = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n) ladder(n - 1, n) = std::sqrt(double(n));
    const Eigen::MatrixXcd idd = Eigen::MatrixXcd::Identity(d, d);
    z = kron(ladder, idd);
    zp = kron(idd, ladder);
    dim = static_cast<long>(d) * d;
  }

  const DenseOperator k_gen = alpha * z.adjoint() * zp -
                              std::conj(alpha) * zp.adjoint() * z;
  const double mod = std::abs(alpha);
  DenseOperator u;
  if (statistics == Statistics::fermi) {
    u = fermi_displacement(k_gen, mod, dim);
  } else {
    u = (-k_gen).exp();
  }
  const DenseOperator lhs = u * z * u.adjoint();
  DenseOperator rhs = std::cos(mod) * z;
  if (mod > 0.0) rhs += (alpha / mod) * std::sin(mod) * zp;
  DenseOperator diff = lhs - rhs;

  if (statistics == Statistics::bose) {
    // Keep only matrix elements between truncation-safe states.
    const int d = bose_cutoff;
    Eigen::VectorXd safe(dim);
    for (long i = 0; i < dim; ++i) {
      const int total = static_cast<int>(i / d + i % d);
      safe[i] = (total <= d / 2) ? 1.0 : 0.0;
    }
    diff = safe.asDiagonal() * diff * safe.asDiagonal();
  }
  return diff.cwiseAbs().maxCoeff();
}

DenseOperator two_step_circuit_operator(const FieldOperatorSet& fields,
                                        const RingGateSet& ring) {
  DenseOperator w = DenseOperator::Identity(fields.dim(), fields.dim());
  for (const auto& b : ring.b_ops) w = b.adjoint() * w;
  for (const auto& a : ring.a_ops) w = a.adjoint() * w;
  return w;
}

Eigen::MatrixXcd single_excitation_sector(const DenseOperator& circuit,
                                          const FieldOperatorSet& fields) {
  const int q = fields.qubits;
  const int n_cells = q / 2;
  const Eigen::VectorXcd vac = vacuum_state(q);
  Eigen::MatrixXcd basis(fields.dim(), q);
  for (int w = 0; w < q; ++w) {
    basis.col(w) = fields.annihilators[w].adjoint() * vac;
  }
  const Eigen::MatrixXcd sector = basis.adjoint() * circuit * basis;
  // Reorder interleaved wires to block layout (plus_0.., minus_0..).
  auto block_index = [n_cells](int w) {
    return (w % 2 == 0) ? w / 2 : n_cells + (w - 1) / 2;
  };
  Eigen::MatrixXcd out(q, q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      out(block_index(i), block_index(j)) = sector(i, j);
    }
  }
  return out;
}

double single_excitation_crosscheck(const SimulationParams& params,
                                    int q_cells) {
  if (q_cells < 2 || q_cells > kMaxCrosscheckCells) {
    throw BudgetError("single_excitation_crosscheck: q_cells " +
                      std::to_string(q_cells) + " outside [2, " +
                      std::to_string(kMaxCrosscheckCells) + "]");
  }
  SimulationParams ring_params =
      params_from_mass_ratio(params.mu, q_cells, params.units);
  const FieldOperatorSet fields = build_jw_fields(2 * q_cells);
  const RingGateSet ring = build_gate_unitaries(ring_params, fields);
  const DenseOperator circuit = two_step_circuit_operator(fields, ring);
  const Eigen::MatrixXcd sector = single_excitation_sector(circuit, fields);
  const Eigen::MatrixXcd kernel =
      two_step_dense_matrix(make_step_operator(ring_params));

  Eigen::Index r = 0, c = 0;
  kernel.cwiseAbs().maxCoeff(&r, &c);
  cd phase = sector(r, c) / kernel(r, c);
  const double mag = std::abs(phase);
  phase = (mag > 0.0) ? phase / mag : cd{1.0, 0.0};
  return (sector - phase * kernel).cwiseAbs().maxCoeff();
}

}  // namespace dqca
