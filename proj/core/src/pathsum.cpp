#include "dqca/pathsum.hpp"

#include <nlohmann/json.hpp>

#include "dqca/errors.hpp"

namespace dqca {

namespace {

using cd = std::complex<double>;

bool is_a_row(int row) { return row % 2 == 1; }

// Gate position and local index of a wire within a row. Wires are block
// indexed: w < N is plus_w, w >= N is minus_{w-N}. In a B row the gate at
// cell n holds (plus_n, minus_n); in an A row the gate at position n holds
// (minus_{n-1}, plus_n).
struct GateSlot {
  int gate;
  int local;
};

GateSlot locate(int wire, int row, int n_cells) {
  if (!is_a_row(row)) {
    return wire < n_cells ? GateSlot{wire, 0} : GateSlot{wire - n_cells, 1};
  }
  if (wire < n_cells) return GateSlot{wire, 1};
  return GateSlot{(wire - n_cells + 1) % n_cells, 0};
}

int wire_of(const GateSlot& slot, int row, int n_cells) {
  if (!is_a_row(row)) {
    return slot.local == 0 ? slot.gate : n_cells + slot.gate;
  }
  if (slot.local == 1) return slot.gate;
  return n_cells + (slot.gate + n_cells - 1) % n_cells;
}

void check_depth(int depth) {
  if (depth < 1) throw ParameterError("path enumeration: depth must be >= 1");
  if (depth > kMaxPathDepth) {
    throw BudgetError("path enumeration: depth " + std::to_string(depth) +
                      " exceeds the exhaustive budget of " +
                      std::to_string(kMaxPathDepth) + " rows");
  }
}

void walk_forward(const StepOperator& op, int row, int wire, cd amplitude,
                  std::vector<PathHop>& hops, std::vector<PathRecord>& out,
                  int target_wire) {
  if (row < 0) {
    out.push_back({hops, amplitude, target_wire, wire});
    return;
  }
  const Eigen::Matrix2cd& u = is_a_row(row) ? op.gates.A : op.gates.B;
  const GateSlot slot = locate(wire, row, op.n_cells);
  for (int j = 0; j < 2; ++j) {
    const cd entry = u(slot.local, j);
    hops.push_back({row, slot.gate, slot.local, j});
    walk_forward(op, row - 1, wire_of({slot.gate, j}, row, op.n_cells),
                 amplitude * entry, hops, out, target_wire);
    hops.pop_back();
  }
}

void walk_backward(const StepOperator& op, int row, int depth, int wire,
                   cd amplitude, std::vector<PathHop>& hops,
                   std::vector<PathRecord>& out, int source_wire) {
  if (row >= depth) {
    out.push_back({hops, amplitude, wire, source_wire});
    return;
  }
  const Eigen::Matrix2cd& u = is_a_row(row) ? op.gates.A : op.gates.B;
  const GateSlot slot = locate(wire, row, op.n_cells);
  for (int i = 0; i < 2; ++i) {
    const cd entry = std::conj(u(i, slot.local));
    hops.push_back({row, slot.gate, i, slot.local});
    walk_backward(op, row + 1, depth, wire_of({slot.gate, i}, row, op.n_cells),
                  amplitude * entry, hops, out, source_wire);
    hops.pop_back();
  }
}

}  // namespace

std::vector<PathRecord> enumerate_forward(const StepOperator& op,
                                          int target_wire, int depth) {
  check_depth(depth);
  if (target_wire < 0 || target_wire >= 2 * op.n_cells) {
    throw ParameterError("enumerate_forward: wire index out of range");
  }
  std::vector<PathRecord> out;
  std::vector<PathHop> hops;
  walk_forward(op, depth - 1, target_wire, cd{1.0, 0.0}, hops, out,
               target_wire);
  return out;
}

std::vector<PathRecord> enumerate_backward(const StepOperator& op,
                                           int source_wire, int depth) {
  check_depth(depth);
  if (source_wire < 0 || source_wire >= 2 * op.n_cells) {
    throw ParameterError("enumerate_backward: wire index out of range");
  }
  std::vector<PathRecord> out;
  std::vector<PathHop> hops;
  walk_backward(op, 0, depth, source_wire, cd{1.0, 0.0}, hops, out,
                source_wire);
  return out;
}

Eigen::MatrixXcd forward_path_matrix(const StepOperator& op, int depth) {
  const int dim = 2 * op.n_cells;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int target = 0; target < dim; ++target) {
    for (const PathRecord& p : enumerate_forward(op, target, depth)) {
      m(p.target_wire, p.source_wire) += p.amplitude;
    }
  }
  return m;
}

Eigen::MatrixXcd backward_path_matrix(const StepOperator& op, int depth) {
  const int dim = 2 * op.n_cells;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int source = 0; source < dim; ++source) {
    for (const PathRecord& p : enumerate_backward(op, source, depth)) {
      m(p.source_wire, p.target_wire) += p.amplitude;
    }
  }
  return m;
}

FieldState evolve_by_paths(const FieldState& state, const StepOperator& op,
                           int depth) {
  check_depth(depth);
  if (depth % 2 != 0) {
    throw ParameterError(
        "evolve_by_paths: depth must be even (whole two-steps)");
  }
  if (op.n_cells > kMaxPathCells) {
    throw BudgetError("evolve_by_paths: n_cells " +
                      std::to_string(op.n_cells) + " exceeds the budget of " +
                      std::to_string(kMaxPathCells));
  }
  if (state.plus.size() != op.n_cells || state.minus.size() != op.n_cells) {
    throw DimensionError("evolve_by_paths: state length mismatch");
  }
  const int n = op.n_cells;
  auto read = [&](int wire) {
    return wire < n ? state.plus[wire] : state.minus[wire - n];
  };
  FieldState out = FieldState::zero(n);
  out.step_count = state.step_count + depth;
  for (int target = 0; target < 2 * n; ++target) {
    cd acc{0.0, 0.0};
    for (const PathRecord& p : enumerate_forward(op, target, depth)) {
      acc += p.amplitude * read(p.source_wire);
    }
    if (target < n) {
      out.plus[target] = acc;
    } else {
      out.minus[target - n] = acc;
    }
  }
  return out;
}

std::string paths_to_json(const std::vector<PathRecord>& paths) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PathRecord& p : paths) {
    nlohmann::json wires = nlohmann::json::array();
    for (const PathHop& h : p.hops) {
      wires.push_back({h.gate, h.row, h.wire_out});
      wires.push_back({h.gate, h.row, h.wire_in});
    }
    arr.push_back({{"wires", std::move(wires)},
                   {"re", p.amplitude.real()},
                   {"im", p.amplitude.imag()}});
  }
  return arr.dump();
}

}  // namespace dqca
