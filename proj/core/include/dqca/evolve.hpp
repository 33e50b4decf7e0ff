#ifndef DQCA_EVOLVE_HPP
#define DQCA_EVOLVE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dqca/field_state.hpp"
#include "dqca/gates.hpp"

namespace dqca {

/// One circuit period on the ring: an intra-cell row (B on (phi+_n, phi-_n))
/// followed by an inter-cell row (A on (phi-_{n-1}, phi+_n)), advancing time
/// by 2*tau. Periodic boundary: the A gate at n = 0 couples cell 0 with cell
/// n_cells-1.
struct StepOperator {
  GatePair gates;
  int n_cells = 2;
};

StepOperator make_step_operator(const SimulationParams& params);

/// Advance by one two-step in place. Throws DimensionError on length
/// mismatch. Norm is preserved to machine precision.
void advance_two_step(FieldState& state, const StepOperator& op);

/// Inverse of advance_two_step: adjoint A row, then adjoint B row.
void retreat_two_step(FieldState& state, const StepOperator& op);

FieldState two_step(const FieldState& state, const StepOperator& op);
FieldState backward_two_step(const FieldState& state, const StepOperator& op);

/// Dense 2N x 2N matrix of one forward two-step, in block index order
/// (plus_0..plus_{N-1}, minus_0..minus_{N-1}). Built column by column from
/// the kernel itself; tests compare it against the row-operator product
/// written out directly from the gate entries.
Eigen::MatrixXcd two_step_dense_matrix(const StepOperator& op);
Eigen::MatrixXcd backward_two_step_dense_matrix(const StepOperator& op);

/// Normalized Gaussian wavepacket
///   envelope(n) = exp(-(n-center)^2/(4 sigma^2)) * exp(i k0 * 2a * n)
/// on the ring (minimal-image distance), split between the two movers by
/// the unit vector `mix` = (plus weight, minus weight).
/// Requires 0 < width_sigma < n_cells/8 and 0 <= center < n_cells.
FieldState gaussian_packet(const SimulationParams& params, double center,
                           double width_sigma, double k0,
                           std::complex<double> mix_plus = 1.0,
                           std::complex<double> mix_minus = 0.0);

/// Observables sampled along a trajectory. `mean_x` is in cell units and is
/// unwrapped across the periodic seam by nearest-image continuation, so it
/// grows without 2*pi-like jumps. `sigma3` is sum |phi+|^2 - |phi-|^2.
struct TrajectorySample {
  long step = 0;  // elapsed tau steps
  double mean_x = 0.0;
  double norm = 0.0;
  double sigma3 = 0.0;
};

/// Mean cell position of `state` unwrapped against a reference position
/// (nearest image of each cell relative to `reference`).
double unwrapped_mean_position(const FieldState& state, double reference);

/// Circular mean position, used to seed the unwrapping.
double circular_mean_position(const FieldState& state);

double sigma3_observable(const FieldState& state);

/// Evolve in place for n_two_steps periods, sampling observables at step 0
/// and after every period (n_two_steps + 1 samples). n_two_steps >= 1.
std::vector<TrajectorySample> run_trajectory(FieldState& state,
                                             const StepOperator& op,
                                             int n_two_steps);

}  // namespace dqca

#endif
