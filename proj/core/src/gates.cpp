#include "dqca/gates.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace dqca {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double max_abs_entry(const Eigen::Matrix2cd& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

double GateIdentityReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : residuals) m = std::max(m, r.value);
  return m;
}

std::vector<NamedResidual> GateIdentityReport::flagged() const {
  std::vector<NamedResidual> out;
  for (const auto& r : residuals) {
    if (r.value > flag_threshold) out.push_back(r);
  }
  return out;
}

GatePair solve_gates(const SimulationParams& params) {
  GatePair gp;
  const double s = params.zeta;  // sin(theta)
  const double c = params.mu;    // cos(theta)
  gp.theta = params.theta;
  gp.phi = 0.0;
  gp.psi = -std::numbers::pi / 2.0;
  gp.xi = -std::numbers::pi / 2.0;
  gp.A << cd{c, 0.0}, cd{0.0, -s}, cd{0.0, -s}, cd{c, 0.0};
  gp.B << cd{0.0, 0.0}, cd{0.0, -1.0}, cd{0.0, -1.0}, cd{0.0, 0.0};
  return gp;
}

GateIdentityReport verify_gate_identities(const GatePair& gp,
                                          const SimulationParams& params) {
  const Eigen::Matrix2cd& A = gp.A;
  const Eigen::Matrix2cd& B = gp.B;
  const cd a11 = A(0, 0), a12 = A(0, 1), a21 = A(1, 0), a22 = A(1, 1);
  const cd b11 = B(0, 0), b12 = B(0, 1), b21 = B(1, 0), b22 = B(1, 1);
  const double mu = params.mu;     // 2a/lambda
  const double zeta = params.zeta;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  GateIdentityReport rep;
  auto add = [&rep](std::string name, double value) {
    rep.residuals.push_back({std::move(name), value});
  };

  add("unitarity_a", std::max(max_abs_entry(A.adjoint() * A - id),
                              max_abs_entry(A * A.adjoint() - id)));
  add("unitarity_b", std::max(max_abs_entry(B.adjoint() * B - id),
                              max_abs_entry(B * B.adjoint() - id)));
  add("det_a", std::abs(A.determinant() - 1.0));
  add("det_b", std::abs(B.determinant() - 1.0));
  // det = 1 unitary form: A11 = conj(A22), A12 = -conj(A21).
  add("special_form_a", std::max(std::abs(a11 - std::conj(a22)),
                                 std::abs(a12 + std::conj(a21))));
  add("special_form_b", std::max(std::abs(b11 - std::conj(b22)),
                                 std::abs(b12 + std::conj(b21))));
  add("b_diagonal", std::max(std::abs(b11), std::abs(b22)));
  // A21*B22 and conj(A12*B11) must coincide (this is what kills the B diagonal).
  add("coupling_pairing", std::abs(a21 * b22 - std::conj(a12) * std::conj(b11)));
  add("transport_real_plus", std::abs(std::imag(a21 * b21 + a22 * b11)));
  add("transport_real_minus", std::abs(std::imag(a12 * b12 + a11 * b22)));
  add("transport_plus", std::abs(std::real(a21 * b21) + zeta));
  add("transport_minus", std::abs(std::real(a12 * b12) + zeta));
  // Mass coupling, split term by term: A22*B12 = -i*mu, conj(A11*B21) = +i*mu,
  // so the difference is -2i*mu = -4ia/lambda.
  add("mass_coupling_fwd", std::abs(a22 * b12 + kI * mu));
  add("mass_coupling_bwd", std::abs(std::conj(a11) * std::conj(b21) - kI * mu));
  add("mass_coupling_combined",
      std::abs(a22 * b12 - std::conj(a11) * std::conj(b21) + 2.0 * kI * mu));
  return rep;
}

}  // namespace dqca
