#ifndef DQCA_PARAMS_HPP
#define DQCA_PARAMS_HPP

#include <vector>

#include "dqca/units.hpp"

namespace dqca {

/// All scalar parameters of one homogeneous circuit, derived from the
/// dimensionless mass ratio mu = 2a/lambda = m/M in [0, 1].
///
/// mu = 0 is the massless point (lambda formally infinite); it is tracked
/// by a flag so that no floating-point infinity enters later formulas.
/// mu = 1 is the heaviest admissible field: zeta = 0, no transport.
struct SimulationParams {
  PhysicalUnits units;
  int n_cells = 2;   // periodic ring length, in two-wire cells
  double mu = 0.0;   // 2a/lambda
  double zeta = 1.0; // sqrt(1 - mu^2): speed renormalization factor
  double theta = 0.0;// gate mixing angle, sin(theta) = zeta
  double omega = 0.0;// direction-flip angular frequency mu*c/(2a)

  bool is_massless() const { return mu == 0.0; }

  /// Compton wavelength 2a/mu. Only defined for mu > 0.
  double compton_wavelength() const;

  /// Heaviest supported mass hbar/(2ac); zeta vanishes there.
  double planck_mass() const {
    return units.hbar / (2.0 * units.a * units.c());
  }

  double mass() const { return mu * planck_mass(); }
};

/// Build the full parameter set from the mass ratio.
/// Throws ParameterError for mu outside [0,1] or n_cells < 2.
SimulationParams params_from_mass_ratio(double mu, int n_cells,
                                        const PhysicalUnits& units = {});

/// Mass in "kg view" from the informational mass omega (1/time):
/// m = (tau^2/a^2) * hbar * omega = hbar*omega/c^2. Linear in omega.
double mass_conversion(double omega, const PhysicalUnits& units);

/// Wavenumbers k_j = 2*pi*j/(2a*n_cells) for integer j in (-N/2, N/2],
/// ascending; covers the Brillouin window (-pi/(2a), pi/(2a)] and always
/// contains k = 0.
std::vector<double> momentum_grid(const SimulationParams& params);

}  // namespace dqca

#endif
