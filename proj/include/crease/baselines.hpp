#pragma once

#include "crease/material.hpp"

namespace crease {

struct DahlParams {
  double kd;       // stress growth rate per unit strain
  double sigma_c;  // saturation stress magnitude
};

// Defaults tie the Dahl scales to the anchor-friction fit so comparisons use
// comparable force levels.
inline DahlParams dahl_defaults(const Material& m) {
  return {m.Kfriction(), m.Kfriction() * m.epsInf};
}

// Classic rate-independent hysteresis: the stress follows strain increments
// and saturates at +-sigma_c.  No state changes while the strain is constant,
// so holds of any duration are no-ops.
struct DahlState {
  double sigma = 0;
  double last_eps = 0;
  double slope = 0;  // d sigma / d eps of the latest update, for the GN term
};

void dahl_update(DahlState& s, double eps, const DahlParams& p);

}  // namespace crease
