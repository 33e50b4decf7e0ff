#ifndef DQCA_PATHSUM_HPP
#define DQCA_PATHSUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "dqca/evolve.hpp"

namespace dqca {

/// One gate crossing of a lattice path. Rows are counted from the input
/// side (row 0 = first B row, odd rows = A rows); `gate` is the cell
/// position of the gate within its row; the local wire indices are 0 for
/// the left wire and 1 for the right one, as the gate diagrams are drawn
/// (the left input of an A gate at position n is the phi- wire of cell
/// n-1).
struct PathHop {
  int row = 0;
  int gate = 0;
  int wire_out = 0;
  int wire_in = 0;
};

/// A lattice path and its amplitude: the product of one matrix element per
/// crossed gate, recomputable from the hops. Wires at a time slice are
/// numbered in block order (plus_0..plus_{N-1}, minus_0..minus_{N-1}).
struct PathRecord {
  std::vector<PathHop> hops;  // forward: top row first; backward: bottom first
  std::complex<double> amplitude{1.0, 0.0};
  int target_wire = 0;  // at the output (latest) slice
  int source_wire = 0;  // at the input (earliest) slice
};

/// Exhaustive-enumeration budget: paths per wire grow as 2^depth.
inline constexpr int kMaxPathDepth = 16;
inline constexpr int kMaxPathCells = 32;

/// All paths reaching `target_wire` at the top of a `depth`-row circuit,
/// walked backward into its past cone; amplitudes are products of forward
/// gate entries. Throws BudgetError above kMaxPathDepth.
std::vector<PathRecord> enumerate_forward(const StepOperator& op,
                                          int target_wire, int depth);

/// All paths leaving `source_wire` at the bottom upward through the future
/// cone; amplitudes use the adjoint gate entries.
std::vector<PathRecord> enumerate_backward(const StepOperator& op,
                                           int source_wire, int depth);

/// Full 2N x 2N evolution matrix assembled from forward path sums;
/// entry (target, source). Unitary on the ring.
Eigen::MatrixXcd forward_path_matrix(const StepOperator& op, int depth);

/// Assembled from backward path sums; entry (source, target). Equals the
/// adjoint of the forward matrix, so their product is the identity.
Eigen::MatrixXcd backward_path_matrix(const StepOperator& op, int depth);

/// Evolve a state by summing path amplitudes. `depth` must be even (each
/// pair of rows is one two-step) and within budget; n_cells is capped at
/// kMaxPathCells. Matches depth/2 applications of two_step.
FieldState evolve_by_paths(const FieldState& state, const StepOperator& op,
                           int depth);

/// Audit dump: JSON array of {"wires": [[gate,row,idx]...], "re":, "im":}
/// with two [gate,row,idx] triples per crossed gate (output then input).
std::string paths_to_json(const std::vector<PathRecord>& paths);

}  // namespace dqca

#endif
