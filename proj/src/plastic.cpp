#include "crease/plastic.hpp"

#include <algorithm>
#include <cmath>

namespace crease {

double hardening(double t_plastic, const PlasticParams& p) {
  return p.Kh0 * (1.0 - p.g * (1.0 - std::exp(-t_plastic / p.tauP)));
}

namespace {

// roundoff band around the yield surface: flow parks the state exactly on it,
// so the next entry must still count as plastic or a constant hold would
// reset the dwell clock every step and hardening could never decay
double surface_band(double eps_y) { return 1e-9 * (1.0 + eps_y); }

double flow(PlasticState& s, double eps_total, double kh, const PlasticParams& p,
            double eps_e, double eps_y) {
  const double sgn = eps_e > 0 ? 1.0 : -1.0;
  const double denom = p.Ke + kh;
  const double d = denom > 0 ? std::max(0.0, p.Ke / denom * (std::abs(eps_e) - eps_y)) : 0.0;
  s.eps_hp += d;
  s.eps_p += sgn * d;
  s.eps_y = p.epsY0 + (p.Ke > 0 ? s.eps_hp * kh / p.Ke : 0.0);
  // cap this step's stress at the updated yield surface
  const double rem = eps_total - s.eps_p;
  return (rem > 0 ? 1.0 : -1.0) * std::min(std::abs(rem), s.eps_y);
}

}  // namespace

double plastic_step(PlasticState& s, double eps_total, double h_eff, const PlasticParams& p) {
  double kh = hardening(s.t_plastic, p);
  s.eps_y = p.epsY0 + (p.Ke > 0 ? s.eps_hp * kh / p.Ke : 0.0);
  const double eps_e = eps_total - s.eps_p;
  if (std::abs(eps_e) < s.eps_y - surface_band(s.eps_y)) {
    s.t_plastic = 0;  // strictly inside: plastic deformation has stopped
    return eps_e;
  }
  const bool codirectional = s.eps_p == 0.0 || (eps_e > 0) == (s.eps_p > 0);
  s.t_plastic = codirectional ? s.t_plastic + h_eff : 0.0;
  kh = hardening(s.t_plastic, p);
  return flow(s, eps_total, kh, p, eps_e, s.eps_y);
}

double plastic_step_fixed_hardening(PlasticState& s, double eps_total, const PlasticParams& p) {
  s.eps_y = p.epsY0 + (p.Ke > 0 ? s.eps_hp * p.Kh0 / p.Ke : 0.0);
  const double eps_e = eps_total - s.eps_p;
  if (std::abs(eps_e) < s.eps_y - surface_band(s.eps_y)) return eps_e;
  return flow(s, eps_total, p.Kh0, p, eps_e, s.eps_y);
}

}  // namespace crease
