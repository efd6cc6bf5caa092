#pragma once

#include <array>
#include <string>
#include <vector>

#include "crease/baselines.hpp"
#include "crease/contact.hpp"
#include "crease/friction.hpp"
#include "crease/material.hpp"
#include "crease/mesh.hpp"
#include "crease/plastic.hpp"
#include "crease/sparse.hpp"

namespace crease {

// Constitutive model selector.  `anchor` is the full model (stick-slip anchor
// friction plus time-dependent hardening); the baselines swap exactly one
// mechanism and disable the other so comparisons stay isolated.
enum class Model { elastic, anchor, dahl, hardening_only };

Model model_from_string(const std::string& s);  // throws std::invalid_argument
std::string model_to_string(Model m);

struct ModelFlags {
  bool bend_friction = true;
  bool bend_plastic = true;
  bool tensile_friction = true;
  bool tensile_plastic = true;
};

struct SolverConfig {
  double h = 0.01;
  double cg_tol = 1e-6;
  int cg_max_iters = 1000;
  double damping = 0;       // mass-proportional, 1/s
  Vec3 gravity = Vec3::Zero();
  double time_scale = 1;    // multiplies the dwell/hardening clocks only
  double guard_factor = 10; // friction step-size guard, in units of epsInf
  ContactParams contact;
};

struct Handle {
  int v;
  Vec3 target;
  double k;
};

struct StepStats {
  int cg_iters = 0;
  double cg_residual = 0;
  int contacts = 0;
  long guard_trips = 0;  // this step
};

struct EnergyReport {
  double kinetic, elastic, gravity;
  double total() const { return kinetic + elastic + gravity; }
};

class Sim {
 public:
  Sim(ClothMesh mesh, Material mat, SolverConfig cfg, Model model = Model::anchor,
      ModelFlags flags = {});

  // One implicit Euler step: constitutive state pass from the current
  // positions, force/Jacobian assembly, pinned CG solve, integrate.  Throws
  // std::runtime_error on CG non-convergence (carrying the final residual)
  // and on non-finite positions (naming the first offending vertex).
  StepStats step();

  // Force and Gauss-Newton Jacobian at the current state; no state changes.
  // Returns the number of active contacts.
  int assemble(std::vector<Vec3>& f, BlockMatrix& J) const;
  // Constitutive pass: plastic flow first, then the friction anchors on the
  // resulting elastic strain; exactly once per step.
  long update_states();

  EnergyReport energy() const;
  double hinge_deviation(int h) const;  // theta - rest_angle at current positions
  // elastic (post-plastic, clamped) deviation entering the bending stress
  double hinge_elastic_deviation(int h) const;

  void pin(const std::vector<int>& verts, bool zero_velocity = true);
  void unpin(const std::vector<int>& verts);

  ClothMesh mesh;
  Material mat;
  SolverConfig cfg;
  Model model;
  ModelFlags flags;
  std::vector<Obstacle> obstacles;
  std::vector<Handle> handles;

  std::vector<FrictionState> bend_fric;             // angle space
  std::vector<PlasticState> bend_plas;              // angle space
  std::vector<DahlState> bend_dahl;                 // angle-stress space
  std::vector<std::array<FrictionState, 3>> ten_fric;  // Green strain space
  std::vector<std::array<PlasticState, 3>> ten_plas;
  DahlParams dahl_params;

  double t = 0;      // kinematic time
  double clock = 0;  // accelerated material time
  long step_count = 0;
  long guard_trips = 0;  // cumulative friction guard trips

 private:
  PlasticParams bend_plastic_params() const;
  FrictionParams bend_friction_params() const;

  std::shared_ptr<const BlockPattern> pattern_;
  BlockMatrix J_, A_;
  std::vector<Vec3> f_, b_, dv_, jv_;
  // dihedral per hinge, unwrapped across the 0/2pi branch cut; refreshed
  // lazily by hinge_deviation so every reader sees a continuous angle
  mutable std::vector<double> theta_;
};

}  // namespace crease
