#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crease/sim.hpp"

namespace crease {

struct MeshSpec {
  std::string kind = "grid";  // grid | cylinder
  double width = 0.3, height = 0.3;
  int nx = 61, ny = 61;
  double radius = 0.05, length = 0.2;
  int n_around = 48, n_along = 24;
  double z0 = 0;            // build height added to every vertex
  double jitter = 0;        // vertex position noise amplitude, m
  unsigned long seed = 0;   // 0 disables jitter
};

struct HandleMotion {
  std::string kind = "none";  // none | translate | rotate
  Vec3 offset = Vec3::Zero();                  // translate: total displacement
  Vec3 axis_point = Vec3::Zero();              // rotate
  Vec3 axis_dir = Vec3::UnitZ();
  double angle = 0;                            // rotate: total angle, rad
};

// Timeline entry.  t0/t1 are kinematic seconds, quantized to steps; `handles`
// events capture grabbed positions at t0 and interpolate the motion until t1,
// after which targets stay at the endpoint until a release_handles event.
struct Event {
  std::string type;  // pin | unpin | handles | release_handles | hold | measure | zero_velocity
  double t0 = 0, t1 = 0;
  std::vector<int> verts;
  HandleMotion motion;
  double stiffness = 1e3;
  double clock_seconds = 0;  // hold: accelerated material time covered
  int steps = 50;            // hold: kinematic steps spent on it
  std::string tag;           // measure
};

// Kinematic steps and clock multiplier realizing a hold of `seconds`.  At
// most 50 steps; time_scale >= 1 always.
void hold_discretization(double seconds, double h, int& steps, double& time_scale);

struct Scenario {
  std::string name = "custom";
  MeshSpec mesh;
  std::string material = "cotton";
  nlohmann::json material_override;  // full material document; replaces the preset
  std::string model = "anchor";
  ModelFlags flags;
  SolverConfig solver;
  std::vector<Obstacle> obstacles;
  std::vector<Event> events;
  double duration = 0;  // kinematic end time, s
  bool record_torque = false;
  Vec3 torque_point = Vec3::Zero();
  Vec3 torque_axis = Vec3::UnitZ();
  double crease_threshold = 0.2;  // |theta - rest| defining the crease set, rad
  int obj_every = 0;              // snapshot period in steps; 0 = measures only
};

nlohmann::json scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

struct WrinkleStats {
  double mean_dev = 0;  // mean |theta - rest|
  double max_dev = 0;
  int count = 0;
};

struct MeasureRecord {
  std::string tag;
  long step = 0;
  double t = 0, clock = 0;
  std::vector<double> dev;  // signed theta - rest per hinge
  std::vector<Vec3> positions;
  WrinkleStats all;
  double mean_stretch = 0;          // mean |eps| over faces and axes
  double mean_tensile_plastic = 0;  // mean |eps_p| over faces and axes
};

struct StepRecord {
  long step = 0;
  double t = 0, clock = 0;
  int cg_iters = 0;
  double cg_residual = 0;
  int contacts = 0;
  long guard_trips = 0;
  double mean_dev = 0, max_dev = 0;
  double torque = 0;
};

struct RunResult {
  std::vector<MeasureRecord> measures;
  std::vector<StepRecord> trace;
  long guard_trips = 0;
  bool step_size_warning = false;

  const MeasureRecord* find(const std::string& tag) const;
};

Sim build_sim(const Scenario& sc);

// Executes the timeline.  When outdir is non-empty writes manifest.json,
// trace.csv, metrics.csv, one OBJ + hinge-state CSV per measure and optional
// periodic OBJ frames; all file contents are pure functions of the scenario.
RunResult run_scenario(Sim& sim, const Scenario& sc, const std::string& outdir = "");
RunResult run_scenario(const Scenario& sc, const std::string& outdir = "");

// Canonical scripts, parameterized by material and hold duration.
struct ScenarioOptions {
  std::string material = "cotton";
  double hold_seconds = 500;
  int resolution = 0;    // grid vertices per side / cylinder ring count; 0 = default
  double h = 0.01;
  std::string model = "anchor";
  double fold_angle = 0;   // 0 = scenario default
  double twist_angle = 0;  // 0 = scenario default
};
std::vector<std::string> canonical_scenario_names();
Scenario make_canonical(const std::string& name, const ScenarioOptions& opt = {});

}  // namespace crease
