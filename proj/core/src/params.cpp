#include "dqca/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dqca {

double SimulationParams::compton_wavelength() const {
  if (is_massless()) {
    throw ParameterError(
        "compton_wavelength: undefined at mu = 0 (massless field)");
  }
  return 2.0 * units.a / mu;
}

SimulationParams params_from_mass_ratio(double mu, int n_cells,
                                        const PhysicalUnits& units) {
  units.validate();
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw ParameterError("params_from_mass_ratio: mu = " + std::to_string(mu) +
                         " outside [0, 1]");
  }
  if (n_cells < 2) {
    throw ParameterError("params_from_mass_ratio: n_cells = " +
                         std::to_string(n_cells) + " < 2");
  }
  SimulationParams p;
  p.units = units;
  p.n_cells = n_cells;
  p.mu = mu;
  p.zeta = std::sqrt(1.0 - mu * mu);
  p.theta = std::asin(p.zeta);
  p.omega = mu * units.c() / (2.0 * units.a);
  return p;
}

double mass_conversion(double omega, const PhysicalUnits& units) {
  units.validate();
  if (!(omega >= 0.0)) {
    throw ParameterError("mass_conversion: omega must be >= 0");
  }
  const double c = units.c();
  return units.hbar * omega / (c * c);
}

std::vector<double> momentum_grid(const SimulationParams& params) {
  const int n = params.n_cells;
  const double a = params.units.a;
  // j in (-N/2, N/2]: j_min = -(N-1)/2 rounded toward zero, j_max = N/2.
  const int j_min = -((n - 1) / 2);
  const int j_max = n / 2;
  std::vector<double> grid;
  grid.reserve(n);
  const double dk = 2.0 * std::numbers::pi / (2.0 * a * n);
  for (int j = j_min; j <= j_max; ++j) grid.push_back(j * dk);
  return grid;
}

}  // namespace dqca
