#pragma once

namespace crease {

struct FrictionParams {
  double eps0;    // threshold right after a slip
  double epsInf;  // threshold after an infinite stick
  double tauF;    // dwell time constant
};

// Internal friction anchor.  The anchor is the strain the stick force pulls
// toward; it shifts when the deviation exceeds the dwell-grown threshold.
struct FrictionState {
  double anchor = 0;
  double t_stick = 0;
  double thres = 0;     // threshold used by the latest update (diagnostic)
  bool slipped = false;
};

double stick_threshold(double t_stick, const FrictionParams& p);

// One anchor update for the current strain.  On slip the anchor moves so the
// deviation equals the threshold that was in effect, then the dwell clock
// resets; large deviations keep sliding over the next updates until the
// deviation reaches eps0.  Returns true when the pre-update deviation
// exceeded guard_factor * epsInf (the step size is too large for the law).
bool friction_update(FrictionState& s, double eps, double h_eff, const FrictionParams& p,
                     double guard_factor = 10.0);

inline double friction_stress(const FrictionState& s, double eps, double k) {
  return k * (eps - s.anchor);
}

}  // namespace crease
