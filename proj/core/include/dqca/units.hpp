#ifndef DQCA_UNITS_HPP
#define DQCA_UNITS_HPP

#include "dqca/errors.hpp"

namespace dqca {

/// Lattice scales of the gate network. `a` is the distance between centers
/// of nearest-neighbor gates, `tau` the time cost of one gate row. The
/// signal speed c = a/tau is always derived, never stored.
///
/// Defaults are natural units a = tau = hbar = 1.
struct PhysicalUnits {
  double a = 1.0;
  double tau = 1.0;
  double hbar = 1.0;

  double c() const { return a / tau; }

  void validate() const {
    if (!(a > 0.0) || !(tau > 0.0) || !(hbar > 0.0)) {
      throw ParameterError("PhysicalUnits: a, tau, hbar must all be positive");
    }
  }
};

}  // namespace dqca

#endif
