#ifndef DQCA_FIELD_STATE_HPP
#define DQCA_FIELD_STATE_HPP

#include <Eigen/Dense>
#include <complex>

namespace dqca {

/// Single-particle amplitudes on the ring: plus[n] is the right-mover
/// phi+ on cell n, minus[n] the left-mover phi-. Stored as two separate
/// contiguous arrays so the row sweeps stay vectorizable.
struct FieldState {
  Eigen::VectorXcd plus;
  Eigen::VectorXcd minus;
  long step_count = 0;  // elapsed tau steps

  int n_cells() const { return static_cast<int>(plus.size()); }

  double squared_norm() const {
    return plus.squaredNorm() + minus.squaredNorm();
  }
  double norm() const { return std::sqrt(squared_norm()); }

  static FieldState zero(int n_cells) {
    FieldState s;
    s.plus = Eigen::VectorXcd::Zero(n_cells);
    s.minus = Eigen::VectorXcd::Zero(n_cells);
    return s;
  }
};

}  // namespace dqca

#endif
