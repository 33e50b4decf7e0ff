#include "dqca/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "dqca/errors.hpp"

namespace dqca {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

}  // namespace

Eigen::Matrix2cd bloch_matrix_kappa(const GatePair& gp, double kappa) {
  const Eigen::Matrix2cd& A = gp.A;
  const Eigen::Matrix2cd& B = gp.B;
  const cd back = std::exp(cd{0.0, -kappa});
  const cd fwd = std::exp(cd{0.0, kappa});
  Eigen::Matrix2cd m;
  m(0, 0) = A(1, 0) * B(1, 0) * back + A(1, 1) * B(0, 0);
  m(0, 1) = A(1, 0) * B(1, 1) * back + A(1, 1) * B(0, 1);
  m(1, 0) = A(0, 0) * B(1, 0) + A(0, 1) * B(0, 0) * fwd;
  m(1, 1) = A(0, 0) * B(1, 1) + A(0, 1) * B(0, 1) * fwd;
  return m;
}

Eigen::Matrix2cd bloch_matrix(const GatePair& gp, double k,
                              const PhysicalUnits& units) {
  return bloch_matrix_kappa(gp, 2.0 * units.a * k);
}

Eigen::Matrix2cd extract_hamiltonian(const GatePair& gp, double k,
                                     const PhysicalUnits& units) {
  const Eigen::Matrix2cd m = bloch_matrix(gp, k, units);
  return cd{0.0, 1.0} * (m - m.adjoint()) / (4.0 * units.tau);
}

double folded_energy(const Eigen::Matrix2cd& bloch, double tau) {
  // Both eigenphases of the two-step unitary sit at pi -+ 2*tau*E; folding
  // |arg| against pi removes the stroboscopic sign and either eigenvalue
  // yields the same branch value.
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(bloch, false);
  const double phase = std::abs(std::arg(es.eigenvalues()[0]));
  return (kPi - phase) / (2.0 * tau);
}

double operator_norm_2x2(const Eigen::Matrix2cd& m) {
  // Singular values from the 2x2 Gram matrix in closed form.
  const double t = m.squaredNorm();  // tr(M^dag M)
  const double d = std::norm(m.determinant());
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * d));
  return std::sqrt(0.5 * (t + disc));
}

namespace {

bool is_uniform_full_window(const std::vector<double>& k_grid, double a) {
  const size_t n = k_grid.size();
  if (n < 3) return false;
  const double dk = k_grid[1] - k_grid[0];
  if (!(dk > 0.0)) return false;
  for (size_t i = 1; i + 1 < n; ++i) {
    if (std::abs((k_grid[i + 1] - k_grid[i]) - dk) > 1e-9 * dk) return false;
  }
  const double period = kPi / a;  // kappa period 2*pi
  return std::abs((k_grid.back() - k_grid.front() + dk) - period) <
         1e-9 * period;
}

}  // namespace

std::vector<SpectralPoint> dispersion(const GatePair& gp,
                                      const SimulationParams& params,
                                      const std::vector<double>& k_grid) {
  if (k_grid.empty()) {
    throw ParameterError("dispersion: empty momentum grid");
  }
  const PhysicalUnits& u = params.units;
  std::vector<SpectralPoint> points(k_grid.size());
  for (size_t i = 0; i < k_grid.size(); ++i) {
    SpectralPoint& pt = points[i];
    pt.k = k_grid[i];
    pt.kappa = 2.0 * u.a * pt.k;
    pt.bloch = bloch_matrix_kappa(gp, pt.kappa);
    pt.hamiltonian = cd{0.0, 1.0} * (pt.bloch - pt.bloch.adjoint()) /
                     (4.0 * u.tau);
    pt.energy = folded_energy(pt.bloch, u.tau);
    pt.hnorm = operator_norm_2x2(pt.hamiltonian);
  }
  const size_t n = points.size();
  if (n >= 3) {
    const bool periodic = is_uniform_full_window(k_grid, u.a);
    auto centered = [&](size_t lo, size_t hi, double dk_total) {
      return (points[hi].energy - points[lo].energy) / dk_total;
    };
    for (size_t i = 0; i + 2 < n; ++i) {
      points[i + 1].group_velocity =
          centered(i, i + 2, k_grid[i + 2] - k_grid[i]);
    }
    const double dk = k_grid[1] - k_grid[0];
    if (periodic) {
      points[0].group_velocity = centered(n - 1, 1, 2.0 * dk);
      points[n - 1].group_velocity = centered(n - 2, 0, 2.0 * dk);
    } else {
      points[0].group_velocity = centered(0, 1, k_grid[1] - k_grid[0]);
      points[n - 1].group_velocity =
          centered(n - 2, n - 1, k_grid[n - 1] - k_grid[n - 2]);
    }
  } else if (n == 2) {
    const double v =
        (points[1].energy - points[0].energy) / (k_grid[1] - k_grid[0]);
    points[0].group_velocity = v;
    points[1].group_velocity = v;
  }
  return points;
}

std::vector<ZetaPoint> zeta_curve(const std::vector<double>& mu_samples) {
  std::vector<ZetaPoint> out;
  out.reserve(mu_samples.size());
  for (double mu : mu_samples) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
      throw ParameterError("zeta_curve: sample " + std::to_string(mu) +
                           " outside [0, 1]");
    }
    out.push_back({mu, std::sqrt(1.0 - mu * mu)});
  }
  return out;
}

BoundCheckResult simulability_bound_check(double h_gate_norm, int n,
                                          double tau, double tolerance) {
  if (n < 1) {
    throw ParameterError("simulability_bound_check: n must be >= 1");
  }
  BoundCheckResult r;
  r.h_gate_norm = h_gate_norm;
  r.bound = 1.0 / (n * tau);
  r.margin = r.bound - h_gate_norm;
  r.pass = r.margin >= -tolerance;
  return r;
}

}  // namespace dqca
