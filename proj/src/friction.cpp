#include "crease/friction.hpp"

#include <cmath>

namespace crease {

double stick_threshold(double t_stick, const FrictionParams& p) {
  return p.epsInf - (p.epsInf - p.eps0) * std::exp(-t_stick / p.tauF);
}

bool friction_update(FrictionState& s, double eps, double h_eff, const FrictionParams& p,
                     double guard_factor) {
  const double thres = stick_threshold(s.t_stick, p);
  const double d = eps - s.anchor;
  const bool guard = std::abs(d) > guard_factor * p.epsInf;
  if (std::abs(d) > thres) {
    s.anchor += (d > 0 ? 1.0 : -1.0) * (std::abs(d) - thres);
    s.t_stick = 0;
    s.slipped = true;
  } else {
    s.t_stick += h_eff;
    s.slipped = false;
  }
  s.thres = thres;
  return guard;
}

}  // namespace crease
