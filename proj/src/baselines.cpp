#include "crease/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace crease {

void dahl_update(DahlState& s, double eps, const DahlParams& p) {
  const double de = eps - s.last_eps;
  s.last_eps = eps;
  if (p.sigma_c <= 0 || p.kd <= 0) {
    s.sigma = 0;
    s.slope = 0;
    return;
  }
  if (de != 0.0) {
    const double sgn = de > 0 ? 1.0 : -1.0;
    s.slope = std::clamp(p.kd * (1.0 - s.sigma / p.sigma_c * sgn), 0.0, 2.0 * p.kd);
    s.sigma = std::clamp(s.sigma + s.slope * de, -p.sigma_c, p.sigma_c);
  } else {
    s.slope = p.kd * (1.0 - std::abs(s.sigma) / p.sigma_c);
  }
}

}  // namespace crease
