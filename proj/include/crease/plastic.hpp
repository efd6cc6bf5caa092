#pragma once

namespace crease {

struct PlasticParams {
  double Ke;     // elastic stiffness on this axis
  double Kh0;    // hardening parameter before any plastic dwell
  double g;      // relative hardening decay depth, in (0,1)
  double tauP;   // hardening decay time constant
  double epsY0;  // initial yield strain
};

struct PlasticState {
  double eps_p = 0;      // permanent strain offset
  double eps_hp = 0;     // accumulated plastic magnitude driving hardening
  double t_plastic = 0;  // co-directional plastic dwell clock
  double eps_y = 0;      // yield strain used by the latest update (diagnostic)
};

// K_h decays with plastic dwell from Kh0 toward Kh0*(1-g).
double hardening(double t_plastic, const PlasticParams& p);

// One yield/flow update for the total strain on this axis.  The yield strain
// is recomputed as epsY0 + eps_hp * K_h/Ke with the current K_h, so hardening
// decay during a hold keeps lowering the surface and flow continues.  Beyond
// yield, a fraction Ke/(Ke+K_h) of the excess converts to plastic strain; the
// dwell clock advances only while flow stays co-directional.  Returns the
// elastic strain for this step's stress, magnitude clamped to the updated
// yield strain.
double plastic_step(PlasticState& s, double eps_total, double h_eff, const PlasticParams& p);

// Same flow rule with K_h frozen at Kh0 and no dwell clock; the baseline is
// then invariant to how long a load is held.
double plastic_step_fixed_hardening(PlasticState& s, double eps_total, const PlasticParams& p);

}  // namespace crease
