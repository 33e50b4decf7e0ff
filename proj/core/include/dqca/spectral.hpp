#ifndef DQCA_SPECTRAL_HPP
#define DQCA_SPECTRAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "dqca/gates.hpp"
#include "dqca/params.hpp"

namespace dqca {

/// Momentum-space record at one wavenumber.
/// `energy` is the eigenphase-derived effective energy E(k) in [0, pi/(2tau)]
/// (stroboscopic sign of the two-step unitary folded out); `hnorm` is the
/// operator norm of H(k), which for the traceless Hermitian 2x2 generator is
/// also the magnitude of its eigenvalues.
struct SpectralPoint {
  double k = 0.0;      // 1/length
  double kappa = 0.0;  // 2*a*k, dimensionless
  Eigen::Matrix2cd bloch;
  Eigen::Matrix2cd hamiltonian;  // 1/time
  double energy = 0.0;           // 1/time
  double group_velocity = 0.0;   // length/time
  double hnorm = 0.0;            // 1/time
};

/// Momentum representation of one two-step on the homogeneous ring, i.e. the
/// two-row transfer matrix with the cell shifts replaced by phases
/// exp(+-i*kappa), kappa = 2*a*k:
///
///   M(k) = [ A21*B21*e^{-ik} + A22*B11   A21*B22*e^{-ik} + A22*B12 ]
///          [ A11*B21 + A12*B11*e^{+ik}   A11*B22 + A12*B12*e^{+ik} ]
///
/// (phases written for kappa). Under the solved gauge this reduces to
/// [[-zeta e^{-i kappa}, -i mu], [-i mu, -zeta e^{+i kappa}]].
Eigen::Matrix2cd bloch_matrix(const GatePair& gp, double k,
                              const PhysicalUnits& units);

/// Same, parametrized directly by the dimensionless phase kappa = 2*a*k.
Eigen::Matrix2cd bloch_matrix_kappa(const GatePair& gp, double kappa);

/// Hermitian generator reconstructed from the 4*tau discrete time
/// derivative: H(k) = i*(M(k) - M(k)^dag)/(4*tau). Under the solved gauge
/// equals (1/(2*tau)) [[-zeta sin kappa, mu], [mu, zeta sin kappa]].
Eigen::Matrix2cd extract_hamiltonian(const GatePair& gp, double k,
                                     const PhysicalUnits& units);

/// Effective energy from the eigenphases of a two-step Bloch matrix:
/// cos(2*tau*E) = zeta*cos(kappa) on the branch E in [0, pi/(2*tau)].
double folded_energy(const Eigen::Matrix2cd& bloch, double tau);

/// Largest singular value of a 2x2 complex matrix, in closed form.
double operator_norm_2x2(const Eigen::Matrix2cd& m);

/// Sweep the k grid; group velocities by centered finite differences
/// (periodic wrap when the grid is the uniform full Brillouin window,
/// one-sided at the ends otherwise). Throws ParameterError on empty grid.
std::vector<SpectralPoint> dispersion(const GatePair& gp,
                                      const SimulationParams& params,
                                      const std::vector<double>& k_grid);

struct ZetaPoint {
  double mu = 0.0;
  double zeta = 0.0;
};

/// zeta = sqrt(1 - mu^2) per sample; throws ParameterError if any sample
/// leaves [0, 1]. Monotone decreasing with endpoints (0,1) and (1,0).
std::vector<ZetaPoint> zeta_curve(const std::vector<double>& mu_samples);

struct BoundCheckResult {
  double h_gate_norm = 0.0;
  double bound = 0.0;   // 1/(n*tau)
  double margin = 0.0;  // bound - h_gate_norm
  bool pass = false;
};

/// Check the simulability bound ||H_gate|| <= 1/(n*tau); `tolerance` absorbs
/// rounding when the bound is saturated exactly.
BoundCheckResult simulability_bound_check(double h_gate_norm, int n,
                                          double tau,
                                          double tolerance = 1e-12);

}  // namespace dqca

#endif
