#include "dqca/evolve.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dqca/errors.hpp"

namespace dqca {

namespace {

using cd = std::complex<double>;

void check_dimensions(const FieldState& s, const StepOperator& op,
                      const char* where) {
  if (s.plus.size() != op.n_cells || s.minus.size() != op.n_cells) {
    throw DimensionError(std::string(where) + ": state has " +
                         std::to_string(s.plus.size()) + "/" +
                         std::to_string(s.minus.size()) +
                         " amplitudes, operator expects " +
                         std::to_string(op.n_cells));
  }
}

// Nearest-image displacement: representative of n modulo n_cells in
// [-N/2, N/2].
double wrap_signed(double n, int n_cells) {
  return std::remainder(n, static_cast<double>(n_cells));
}

}  // namespace

StepOperator make_step_operator(const SimulationParams& params) {
  return StepOperator{solve_gates(params), params.n_cells};
}

void advance_two_step(FieldState& state, const StepOperator& op) {
  check_dimensions(state, op, "advance_two_step");
  const int n = op.n_cells;
  cd* p = state.plus.data();
  cd* m = state.minus.data();
  const cd b11 = op.gates.B(0, 0), b12 = op.gates.B(0, 1);
  const cd b21 = op.gates.B(1, 0), b22 = op.gates.B(1, 1);
  for (int i = 0; i < n; ++i) {
    const cd u = p[i], v = m[i];
    p[i] = b11 * u + b12 * v;
    m[i] = b21 * u + b22 * v;
  }
  const cd a11 = op.gates.A(0, 0), a12 = op.gates.A(0, 1);
  const cd a21 = op.gates.A(1, 0), a22 = op.gates.A(1, 1);
  // Gate i acts on (minus_{i-1}, plus_i); each slot is touched exactly once.
  {
    const cd u = m[n - 1], v = p[0];
    m[n - 1] = a11 * u + a12 * v;
    p[0] = a21 * u + a22 * v;
  }
  for (int i = 1; i < n; ++i) {
    const cd u = m[i - 1], v = p[i];
    m[i - 1] = a11 * u + a12 * v;
    p[i] = a21 * u + a22 * v;
  }
  state.step_count += 2;
}

void retreat_two_step(FieldState& state, const StepOperator& op) {
  check_dimensions(state, op, "retreat_two_step");
  const int n = op.n_cells;
  cd* p = state.plus.data();
  cd* m = state.minus.data();
  // Adjoint A row first (entries of A^dag), then adjoint B row.
  const cd a11 = std::conj(op.gates.A(0, 0)), a12 = std::conj(op.gates.A(1, 0));
  const cd a21 = std::conj(op.gates.A(0, 1)), a22 = std::conj(op.gates.A(1, 1));
  {
    const cd u = m[n - 1], v = p[0];
    m[n - 1] = a11 * u + a12 * v;
    p[0] = a21 * u + a22 * v;
  }
  for (int i = 1; i < n; ++i) {
    const cd u = m[i - 1], v = p[i];
    m[i - 1] = a11 * u + a12 * v;
    p[i] = a21 * u + a22 * v;
  }
  const cd b11 = std::conj(op.gates.B(0, 0)), b12 = std::conj(op.gates.B(1, 0));
  const cd b21 = std::conj(op.gates.B(0, 1)), b22 = std::conj(op.gates.B(1, 1));
  for (int i = 0; i < n; ++i) {
    const cd u = p[i], v = m[i];
    p[i] = b11 * u + b12 * v;
    m[i] = b21 * u + b22 * v;
  }
  state.step_count -= 2;
}

FieldState two_step(const FieldState& state, const StepOperator& op) {
  FieldState out = state;
  advance_two_step(out, op);
  return out;
}

FieldState backward_two_step(const FieldState& state, const StepOperator& op) {
  FieldState out = state;
  retreat_two_step(out, op);
  return out;
}

namespace {

Eigen::MatrixXcd dense_from_stepper(const StepOperator& op, bool forward) {
  const int n = op.n_cells;
  Eigen::MatrixXcd mat(2 * n, 2 * n);
  for (int col = 0; col < 2 * n; ++col) {
    FieldState basis = FieldState::zero(n);
    if (col < n) {
      basis.plus[col] = 1.0;
    } else {
      basis.minus[col - n] = 1.0;
    }
    if (forward) {
      advance_two_step(basis, op);
    } else {
      retreat_two_step(basis, op);
    }
    mat.col(col).head(n) = basis.plus;
    mat.col(col).tail(n) = basis.minus;
  }
  return mat;
}

}  // namespace

Eigen::MatrixXcd two_step_dense_matrix(const StepOperator& op) {
  return dense_from_stepper(op, true);
}

Eigen::MatrixXcd backward_two_step_dense_matrix(const StepOperator& op) {
  return dense_from_stepper(op, false);
}

FieldState gaussian_packet(const SimulationParams& params, double center,
                           double width_sigma, double k0,
                           std::complex<double> mix_plus,
                           std::complex<double> mix_minus) {
  const int n = params.n_cells;
  if (!(width_sigma > 0.0) || !(width_sigma < n / 8.0)) {
    throw ParameterError("gaussian_packet: width_sigma = " +
                         std::to_string(width_sigma) +
                         " outside (0, n_cells/8)");
  }
  if (!(center >= 0.0) || !(center < n)) {
    throw ParameterError("gaussian_packet: center outside [0, n_cells)");
  }
  const double mix_norm =
      std::sqrt(std::norm(mix_plus) + std::norm(mix_minus));
  if (!(mix_norm > 0.0)) {
    throw ParameterError("gaussian_packet: zero component mix");
  }
  FieldState s = FieldState::zero(n);
  const double phase_step = k0 * 2.0 * params.units.a;
  for (int i = 0; i < n; ++i) {
    const double d = wrap_signed(i - center, n);
    const double env = std::exp(-d * d / (4.0 * width_sigma * width_sigma));
    const cd wave = env * std::exp(cd{0.0, phase_step * i});
    s.plus[i] = wave * (mix_plus / mix_norm);
    s.minus[i] = wave * (mix_minus / mix_norm);
  }
  const double norm = s.norm();
  s.plus /= norm;
  s.minus /= norm;
  return s;
}

double circular_mean_position(const FieldState& state) {
  const int n = state.n_cells();
  const double w = 2.0 * std::numbers::pi / n;
  cd resultant{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double weight = std::norm(state.plus[i]) + std::norm(state.minus[i]);
    resultant += weight * std::exp(cd{0.0, w * i});
  }
  double pos = std::arg(resultant) / w;
  if (pos < 0.0) pos += n;
  return pos;
}

double unwrapped_mean_position(const FieldState& state, double reference) {
  const int n = state.n_cells();
  double total = 0.0, displaced = 0.0;
  for (int i = 0; i < n; ++i) {
    const double weight = std::norm(state.plus[i]) + std::norm(state.minus[i]);
    total += weight;
    displaced += weight * wrap_signed(i - reference, n);
  }
  return reference + displaced / total;
}

double sigma3_observable(const FieldState& state) {
  return state.plus.squaredNorm() - state.minus.squaredNorm();
}

std::vector<TrajectorySample> run_trajectory(FieldState& state,
                                             const StepOperator& op,
                                             int n_two_steps) {
  if (n_two_steps < 1) {
    throw ParameterError("run_trajectory: n_two_steps must be >= 1");
  }
  check_dimensions(state, op, "run_trajectory");
  std::vector<TrajectorySample> samples;
  samples.reserve(n_two_steps + 1);
  double ref = circular_mean_position(state);
  auto record = [&]() {
    const double mean_x = unwrapped_mean_position(state, ref);
    samples.push_back(
        {state.step_count, mean_x, state.norm(), sigma3_observable(state)});
    ref = mean_x;
  };
  record();
  for (int t = 0; t < n_two_steps; ++t) {
    advance_two_step(state, op);
    record();
  }
  return samples;
}

}  // namespace dqca
