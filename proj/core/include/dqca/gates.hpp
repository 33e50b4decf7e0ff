#ifndef DQCA_GATES_HPP
#define DQCA_GATES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dqca/params.hpp"

namespace dqca {

/// The two 2x2 unitaries of the alternating circuit, in the fixed gauge
/// phi = 0, xi = psi = -pi/2:
///
///   A = [ cos(theta)      -i sin(theta) ]     B = [ 0   -i ]
///       [ -i sin(theta)    cos(theta)   ]         [ -i   0 ]
///
/// with sin(theta) = zeta and cos(theta) = mu. Both have determinant 1.
struct GatePair {
  Eigen::Matrix2cd A;
  Eigen::Matrix2cd B;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double xi = 0.0;
};

/// One named constraint violation; value is an absolute residual.
struct NamedResidual {
  std::string name;
  double value = 0.0;
};

/// Residuals of every algebraic identity the circuit imposes on (A, B).
/// A residual above `flag_threshold` marks a broken gate pair.
struct GateIdentityReport {
  std::vector<NamedResidual> residuals;
  double flag_threshold = 1e-10;

  double max_residual() const;
  std::vector<NamedResidual> flagged() const;
  bool all_within(double tol) const { return max_residual() <= tol; }
};

/// Solve for the gate pair realizing the given mass ratio.
/// cos(theta) and sin(theta) are taken directly from (mu, zeta) so the
/// massless (swap) and maximal-mass (identity transport) limits are exact.
GatePair solve_gates(const SimulationParams& params);

/// Check unitarity, det = 1, the vanishing B diagonal, the realness and
/// -zeta value of the transport products A21*B21 and A12*B12, and the mass
/// coupling A22*B12 = -i*mu = -2ia/lambda split across both of its terms.
/// Accepts any gauge; only the identities are enforced.
GateIdentityReport verify_gate_identities(const GatePair& gp,
                                          const SimulationParams& params);

}  // namespace dqca

#endif
