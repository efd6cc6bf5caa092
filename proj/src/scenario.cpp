#include "crease/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "crease/elastic.hpp"
#include "crease/metrics.hpp"
#include "crease/obj_io.hpp"

namespace crease {

void hold_discretization(double seconds, double h, int& steps, double& time_scale) {
  if (!(seconds > 0)) throw std::invalid_argument("hold duration must be positive");
  steps = static_cast<int>(std::min(50.0, std::max(1.0, std::round(seconds / h))));
  time_scale = std::max(1.0, seconds / (h * steps));
}

namespace {

nlohmann::json vec_to_json(const Vec3& v) { return nlohmann::json::array({v.x(), v.y(), v.z()}); }

Vec3 vec_from_json(const nlohmann::json& j) { return Vec3(j.at(0), j.at(1), j.at(2)); }

long step_of(double t, double h) { return std::lround(t / h); }

Vec3 apply_motion(const HandleMotion& m, const Vec3& p0, double frac) {
  if (m.kind == "translate") return p0 + frac * m.offset;
  if (m.kind == "rotate") {
    const Vec3 axis = m.axis_dir.normalized();
    return m.axis_point + Eigen::AngleAxisd(frac * m.angle, axis) * (p0 - m.axis_point);
  }
  return p0;
}

const char* shape_name(Obstacle::Shape s) {
  switch (s) {
    case Obstacle::Shape::plane: return "plane";
    case Obstacle::Shape::sphere: return "sphere";
    case Obstacle::Shape::box: return "box";
    case Obstacle::Shape::tube: return "tube";
  }
  return "plane";
}

Obstacle::Shape shape_from_name(const std::string& s) {
  if (s == "plane") return Obstacle::Shape::plane;
  if (s == "sphere") return Obstacle::Shape::sphere;
  if (s == "box") return Obstacle::Shape::box;
  if (s == "tube") return Obstacle::Shape::tube;
  throw std::invalid_argument("unknown obstacle shape '" + s + "'");
}

}  // namespace

nlohmann::json scenario_to_json(const Scenario& sc) {
  nlohmann::json j;
  j["name"] = sc.name;
  j["mesh"] = {{"kind", sc.mesh.kind},         {"width", sc.mesh.width},
               {"height", sc.mesh.height},     {"nx", sc.mesh.nx},
               {"ny", sc.mesh.ny},             {"radius", sc.mesh.radius},
               {"length", sc.mesh.length},     {"n_around", sc.mesh.n_around},
               {"n_along", sc.mesh.n_along},   {"z0", sc.mesh.z0},
               {"jitter", sc.mesh.jitter},     {"seed", sc.mesh.seed}};
  j["material"] = sc.material;
  if (!sc.material_override.is_null()) j["material_override"] = sc.material_override;
  j["model"] = sc.model;
  j["flags"] = {{"bend_friction", sc.flags.bend_friction},
                {"bend_plastic", sc.flags.bend_plastic},
                {"tensile_friction", sc.flags.tensile_friction},
                {"tensile_plastic", sc.flags.tensile_plastic}};
  j["solver"] = {{"h", sc.solver.h},
                 {"cg_tol", sc.solver.cg_tol},
                 {"cg_max_iters", sc.solver.cg_max_iters},
                 {"damping", sc.solver.damping},
                 {"gravity", vec_to_json(sc.solver.gravity)},
                 {"guard_factor", sc.solver.guard_factor},
                 {"contact", {{"kc", sc.solver.contact.kc},
                              {"mu", sc.solver.contact.mu},
                              {"thickness", sc.solver.contact.thickness},
                              {"v_stick", sc.solver.contact.v_stick}}}};
  j["obstacles"] = nlohmann::json::array();
  for (const Obstacle& ob : sc.obstacles) {
    nlohmann::json o = {{"shape", shape_name(ob.shape)}, {"name", ob.name},
                        {"p", vec_to_json(ob.p)},        {"n", vec_to_json(ob.n)},
                        {"radius", ob.radius},           {"half", vec_to_json(ob.half)}};
    o["track"] = nlohmann::json::array();
    for (const Keyframe& k : ob.track) o["track"].push_back({{"t", k.t}, {"pos", vec_to_json(k.pos)}});
    j["obstacles"].push_back(o);
  }
  j["events"] = nlohmann::json::array();
  for (const Event& ev : sc.events) {
    nlohmann::json e = {{"type", ev.type}, {"t0", ev.t0}, {"t1", ev.t1}};
    if (!ev.verts.empty()) e["verts"] = ev.verts;
    if (ev.motion.kind != "none")
      e["motion"] = {{"kind", ev.motion.kind},
                     {"offset", vec_to_json(ev.motion.offset)},
                     {"axis_point", vec_to_json(ev.motion.axis_point)},
                     {"axis_dir", vec_to_json(ev.motion.axis_dir)},
                     {"angle", ev.motion.angle}};
    if (ev.type == "handles") e["stiffness"] = ev.stiffness;
    if (ev.type == "hold") {
      e["clock_seconds"] = ev.clock_seconds;
      e["steps"] = ev.steps;
    }
    if (ev.type == "measure") e["tag"] = ev.tag;
    j["events"].push_back(e);
  }
  j["duration"] = sc.duration;
  j["record_torque"] = sc.record_torque;
  j["torque_point"] = vec_to_json(sc.torque_point);
  j["torque_axis"] = vec_to_json(sc.torque_axis);
  j["crease_threshold"] = sc.crease_threshold;
  j["obj_every"] = sc.obj_every;
  return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario sc;
  sc.name = j.value("name", "custom");
  if (j.contains("mesh")) {
    const auto& m = j.at("mesh");
    sc.mesh.kind = m.value("kind", "grid");
    sc.mesh.width = m.value("width", sc.mesh.width);
    sc.mesh.height = m.value("height", sc.mesh.height);
    sc.mesh.nx = m.value("nx", sc.mesh.nx);
    sc.mesh.ny = m.value("ny", sc.mesh.ny);
    sc.mesh.radius = m.value("radius", sc.mesh.radius);
    sc.mesh.length = m.value("length", sc.mesh.length);
    sc.mesh.n_around = m.value("n_around", sc.mesh.n_around);
    sc.mesh.n_along = m.value("n_along", sc.mesh.n_along);
    sc.mesh.z0 = m.value("z0", 0.0);
    sc.mesh.jitter = m.value("jitter", 0.0);
    sc.mesh.seed = m.value("seed", 0UL);
  }
  sc.material = j.value("material", "cotton");
  if (j.contains("material_override")) sc.material_override = j.at("material_override");
  sc.model = j.value("model", "anchor");
  if (j.contains("flags")) {
    const auto& f = j.at("flags");
    sc.flags.bend_friction = f.value("bend_friction", true);
    sc.flags.bend_plastic = f.value("bend_plastic", true);
    sc.flags.tensile_friction = f.value("tensile_friction", true);
    sc.flags.tensile_plastic = f.value("tensile_plastic", true);
  }
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    sc.solver.h = s.value("h", 0.01);
    sc.solver.cg_tol = s.value("cg_tol", 1e-6);
    sc.solver.cg_max_iters = s.value("cg_max_iters", 1000);
    sc.solver.damping = s.value("damping", 0.0);
    if (s.contains("gravity")) sc.solver.gravity = vec_from_json(s.at("gravity"));
    sc.solver.guard_factor = s.value("guard_factor", 10.0);
    if (s.contains("contact")) {
      const auto& c = s.at("contact");
      sc.solver.contact.kc = c.value("kc", 1e3);
      sc.solver.contact.mu = c.value("mu", 0.3);
      sc.solver.contact.thickness = c.value("thickness", 2e-3);
      sc.solver.contact.v_stick = c.value("v_stick", 1e-4);
    }
  }
  if (j.contains("obstacles"))
    for (const auto& o : j.at("obstacles")) {
      Obstacle ob;
      ob.shape = shape_from_name(o.at("shape"));
      ob.name = o.value("name", "");
      if (o.contains("p")) ob.p = vec_from_json(o.at("p"));
      if (o.contains("n")) ob.n = vec_from_json(o.at("n")).normalized();
      ob.radius = o.value("radius", 0.0);
      if (o.contains("half")) ob.half = vec_from_json(o.at("half"));
      if (o.contains("track"))
        for (const auto& k : o.at("track")) ob.track.push_back({k.at("t"), vec_from_json(k.at("pos"))});
      sc.obstacles.push_back(ob);
    }
  if (j.contains("events"))
    for (const auto& e : j.at("events")) {
      Event ev;
      ev.type = e.at("type");
      ev.t0 = e.value("t0", 0.0);
      ev.t1 = e.value("t1", ev.t0);
      if (e.contains("verts")) ev.verts = e.at("verts").get<std::vector<int>>();
      if (e.contains("motion")) {
        const auto& m = e.at("motion");
        ev.motion.kind = m.value("kind", "none");
        if (m.contains("offset")) ev.motion.offset = vec_from_json(m.at("offset"));
        if (m.contains("axis_point")) ev.motion.axis_point = vec_from_json(m.at("axis_point"));
        if (m.contains("axis_dir")) ev.motion.axis_dir = vec_from_json(m.at("axis_dir"));
        ev.motion.angle = m.value("angle", 0.0);
      }
      ev.stiffness = e.value("stiffness", 1e3);
      ev.clock_seconds = e.value("clock_seconds", 0.0);
      ev.steps = e.value("steps", 50);
      ev.tag = e.value("tag", "");
      sc.events.push_back(ev);
    }
  sc.duration = j.value("duration", 0.0);
  sc.record_torque = j.value("record_torque", false);
  if (j.contains("torque_point")) sc.torque_point = vec_from_json(j.at("torque_point"));
  if (j.contains("torque_axis")) sc.torque_axis = vec_from_json(j.at("torque_axis"));
  sc.crease_threshold = j.value("crease_threshold", 0.2);
  sc.obj_every = j.value("obj_every", 0);
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
  nlohmann::json j;
  in >> j;
  return scenario_from_json(j);
}

const MeasureRecord* RunResult::find(const std::string& tag) const {
  for (const auto& m : measures)
    if (m.tag == tag) return &m;
  return nullptr;
}

Sim build_sim(const Scenario& sc) {
  Material mat = sc.material_override.is_null() ? material_preset(sc.material)
                                                : material_from_json(sc.material_override);
  validate_material(mat);
  ClothMesh mesh;
  if (sc.mesh.kind == "grid")
    mesh = build_grid(sc.mesh.width, sc.mesh.height, sc.mesh.nx, sc.mesh.ny, mat.rho);
  else if (sc.mesh.kind == "cylinder")
    mesh = build_cylinder(sc.mesh.radius, sc.mesh.length, sc.mesh.n_around, sc.mesh.n_along,
                          mat.rho);
  else
    throw std::invalid_argument("unknown mesh kind '" + sc.mesh.kind + "'");
  if (sc.mesh.z0 != 0)
    for (auto& x : mesh.X) x.z() += sc.mesh.z0;  // translation leaves the rest state intact
  if (sc.mesh.seed != 0 && sc.mesh.jitter > 0) {
    std::mt19937_64 rng(sc.mesh.seed);
    std::uniform_real_distribution<double> u(-sc.mesh.jitter, sc.mesh.jitter);
    for (auto& x : mesh.X) x += Vec3(u(rng), u(rng), u(rng));
    finalize_rest_state(mesh, mat.rho);  // jittered geometry is the rest state
  }
  Sim sim(std::move(mesh), mat, sc.solver, model_from_string(sc.model), sc.flags);
  sim.obstacles = sc.obstacles;
  return sim;
}

namespace {

MeasureRecord take_measure(const Sim& sim, const std::string& tag) {
  MeasureRecord r;
  r.tag = tag;
  r.step = sim.step_count;
  r.t = sim.t;
  r.clock = sim.clock;
  r.dev.resize(sim.mesh.nh());
  for (int h = 0; h < sim.mesh.nh(); ++h) r.dev[h] = sim.hinge_deviation(h);
  r.positions = sim.mesh.X;
  r.all = stats_all(r.dev);
  double stretch = 0, plastic = 0;
  for (int f = 0; f < sim.mesh.nf(); ++f) {
    const auto& tri = sim.mesh.F[f];
    const MembraneStrain ms = membrane_strain(sim.mesh.X[tri[0]], sim.mesh.X[tri[1]],
                                              sim.mesh.X[tri[2]], sim.mesh.face_rest[f]);
    for (int k = 0; k < 3; ++k) {
      stretch += std::abs(ms.eps[k]);
      plastic += std::abs(sim.ten_plas[f][k].eps_p);
    }
  }
  const double denom = std::max(1, sim.mesh.nf() * 3);
  r.mean_stretch = stretch / denom;
  r.mean_tensile_plastic = plastic / denom;
  return r;
}

void write_states_csv(const std::string& path, const Sim& sim) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  std::fprintf(fp, "hinge,dev,anchor,t_stick,thres,eps_p,eps_hp,t_plastic,eps_y\n");
  for (int h = 0; h < sim.mesh.nh(); ++h) {
    const FrictionState& f = sim.bend_fric[h];
    const PlasticState& p = sim.bend_plas[h];
    std::fprintf(fp, "%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", h,
                 sim.hinge_deviation(h), f.anchor, f.t_stick, f.thres, p.eps_p, p.eps_hp,
                 p.t_plastic, p.eps_y);
  }
  std::fclose(fp);
}

void write_trace_csv(const std::string& path, const RunResult& rr, bool torque) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  std::fprintf(fp, "step,t,clock,cg_iters,cg_residual,contacts,guard_trips,mean_dev,max_dev%s\n",
               torque ? ",torque" : "");
  for (const StepRecord& s : rr.trace) {
    std::fprintf(fp, "%ld,%.12g,%.12g,%d,%.12g,%d,%ld,%.12g,%.12g", s.step, s.t, s.clock,
                 s.cg_iters, s.cg_residual, s.contacts, s.guard_trips, s.mean_dev, s.max_dev);
    if (torque) std::fprintf(fp, ",%.12g", s.torque);
    std::fprintf(fp, "\n");
  }
  std::fclose(fp);
}

void write_metrics_csv(const std::string& path, const RunResult& rr, double crease_threshold) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  std::fprintf(fp,
               "tag,step,t,clock,hinges,mean_dev,max_dev,crease_count,crease_mean,crease_max,"
               "recovery_pct,mean_stretch,mean_tensile_plastic\n");
  const MeasureRecord* held = rr.find("held");
  std::vector<int> cset;
  if (held) cset = crease_set(*held, crease_threshold);
  for (const MeasureRecord& m : rr.measures) {
    WrinkleStats cs{};
    double rec = std::nan("");
    if (held && !cset.empty()) {
      cs = stats_over(m.dev, cset);
      const WrinkleStats hs = stats_over(held->dev, cset);
      rec = recovery_percent(hs.mean_dev, cs.mean_dev);
    }
    std::fprintf(fp, "%s,%ld,%.12g,%.12g,%d,%.12g,%.12g,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                 m.tag.c_str(), m.step, m.t, m.clock, m.all.count, m.all.mean_dev, m.all.max_dev,
                 cs.count, cs.mean_dev, cs.max_dev, rec, m.mean_stretch, m.mean_tensile_plastic);
  }
  std::fclose(fp);
}

struct ActiveHandleEvent {
  const Event* ev;
  long s0, s1;
  bool captured = false;
  bool released = false;
  std::vector<Vec3> p0;
};

}  // namespace

RunResult run_scenario(Sim& sim, const Scenario& sc, const std::string& outdir) {
  const double h = sim.cfg.h;
  const long total = step_of(sc.duration, h);
  if (total <= 0) throw std::invalid_argument("scenario duration shorter than one step");
  const bool writing = !outdir.empty();
  if (writing) std::filesystem::create_directories(outdir);

  std::vector<ActiveHandleEvent> hevents;
  struct HoldWindow {
    long s0, s1;
    double ts;
  };
  std::vector<HoldWindow> holds;
  for (const Event& ev : sc.events) {
    const long s0 = step_of(ev.t0, h);
    if (ev.type == "handles") {
      const long s1 = std::max(step_of(ev.t1, h), s0 + 1);
      hevents.push_back({&ev, s0, s1, false, false, {}});
    } else if (ev.type == "hold") {
      const double ts = std::max(1.0, ev.clock_seconds / (h * ev.steps));
      holds.push_back({s0, s0 + ev.steps, ts});
    }
  }

  RunResult rr;
  for (long s = 0; s <= total; ++s) {
    // instant events fire against the converged state at time s*h
    for (const Event& ev : sc.events) {
      if (step_of(ev.t0, h) != s) continue;
      if (ev.type == "pin") {
        sim.pin(ev.verts);
      } else if (ev.type == "unpin") {
        sim.unpin(ev.verts);
      } else if (ev.type == "zero_velocity") {
        if (ev.verts.empty())
          for (auto& v : sim.mesh.V) v.setZero();
        else
          for (int v : ev.verts) sim.mesh.V[v].setZero();
      } else if (ev.type == "release_handles") {
        // handles starting this same step survive; only earlier grabs let go
        for (auto& he : hevents)
          if (he.s0 < s) he.released = true;
      } else if (ev.type == "measure") {
        rr.measures.push_back(take_measure(sim, ev.tag));
        if (writing) {
          write_obj(outdir + "/" + ev.tag + ".obj", sim.mesh.X, sim.mesh.F);
          write_states_csv(outdir + "/states_" + ev.tag + ".csv", sim);
        }
      }
    }
    if (s == total) break;

    sim.handles.clear();
    for (auto& he : hevents) {
      if (he.released || s < he.s0) continue;
      if (!he.captured) {
        he.p0.reserve(he.ev->verts.size());
        for (int v : he.ev->verts) he.p0.push_back(sim.mesh.X[v]);
        he.captured = true;
      }
      const double frac =
          s >= he.s1 ? 1.0 : static_cast<double>(s + 1 - he.s0) / static_cast<double>(he.s1 - he.s0);
      for (size_t k = 0; k < he.ev->verts.size(); ++k)
        sim.handles.push_back(
            {he.ev->verts[k], apply_motion(he.ev->motion, he.p0[k], frac), he.ev->stiffness});
    }

    sim.cfg.time_scale = 1.0;
    for (const HoldWindow& hw : holds)
      if (s >= hw.s0 && s < hw.s1) sim.cfg.time_scale = hw.ts;

    const StepStats st = sim.step();

    StepRecord tr;
    tr.step = sim.step_count;
    tr.t = sim.t;
    tr.clock = sim.clock;
    tr.cg_iters = st.cg_iters;
    tr.cg_residual = st.cg_residual;
    tr.contacts = st.contacts;
    tr.guard_trips = st.guard_trips;
    double sum = 0, mx = 0;
    for (int hh = 0; hh < sim.mesh.nh(); ++hh) {
      const double d = std::abs(sim.hinge_deviation(hh));
      sum += d;
      mx = std::max(mx, d);
    }
    tr.mean_dev = sim.mesh.nh() > 0 ? sum / sim.mesh.nh() : 0;
    tr.max_dev = mx;
    if (sc.record_torque) {
      const Vec3 axis = sc.torque_axis.normalized();
      double torque = 0;
      for (const Handle& hd : sim.handles) {
        const Vec3 fh = hd.k * (hd.target - sim.mesh.X[hd.v]);
        torque += (sim.mesh.X[hd.v] - sc.torque_point).cross(fh).dot(axis);
      }
      tr.torque = torque;
    }
    rr.trace.push_back(tr);

    if (writing && sc.obj_every > 0 && (s + 1) % sc.obj_every == 0) {
      char name[64];
      std::snprintf(name, sizeof name, "/frame_%06ld.obj", s + 1);
      write_obj(outdir + name, sim.mesh.X, sim.mesh.F);
    }
  }

  rr.guard_trips = sim.guard_trips;
  rr.step_size_warning = sim.guard_trips > 0;

  if (writing) {
    nlohmann::json manifest;
    manifest["tool"] = "crease";
    manifest["version"] = "1.0.0";
    manifest["scenario"] = scenario_to_json(sc);
    manifest["guard_trips"] = rr.guard_trips;
    manifest["step_size_warning"] = rr.step_size_warning;
    std::ofstream mf(outdir + "/manifest.json");
    mf << manifest.dump(2) << "\n";
    write_trace_csv(outdir + "/trace.csv", rr, sc.record_torque);
    write_metrics_csv(outdir + "/metrics.csv", rr, sc.crease_threshold);
  }
  return rr;
}

RunResult run_scenario(const Scenario& sc, const std::string& outdir) {
  Sim sim = build_sim(sc);
  return run_scenario(sim, sc, outdir);
}

// ---------------------------------------------------------------------------
// canonical scripts

namespace {

int default_res(int requested, int fallback) {
  int r = requested > 0 ? requested : fallback;
  if (r % 2 == 0) ++r;  // odd counts give an exact center column
  return std::max(r, 5);
}

std::vector<int> grid_column(int nx, int ny, int i) {
  std::vector<int> v;
  v.reserve(ny);
  for (int j = 0; j < ny; ++j) v.push_back(j * nx + i);
  return v;
}

std::vector<int> grid_half(int nx, int ny, int i_begin, int i_end) {
  std::vector<int> v;
  for (int j = 0; j < ny; ++j)
    for (int i = i_begin; i < i_end; ++i) v.push_back(j * nx + i);
  return v;
}

std::vector<int> grid_border(int nx, int ny) {
  std::vector<int> v;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) v.push_back(j * nx + i);
  return v;
}

std::vector<int> cylinder_ring(int n_around, int ring) {
  std::vector<int> v;
  v.reserve(n_around);
  for (int i = 0; i < n_around; ++i) v.push_back(ring * n_around + i);
  return v;
}

Event handles_event(std::vector<int> verts, HandleMotion motion, double t0, double t1,
                    double stiffness = 20.0) {
  Event ev;
  ev.type = "handles";
  ev.t0 = t0;
  ev.t1 = t1;
  ev.verts = std::move(verts);
  ev.motion = motion;
  ev.stiffness = stiffness;
  return ev;
}

Event instant_event(const std::string& type, double t0, std::vector<int> verts = {}) {
  Event ev;
  ev.type = type;
  ev.t0 = ev.t1 = t0;
  ev.verts = std::move(verts);
  return ev;
}

Event hold_event(double t0, double clock_seconds, double h) {
  Event ev;
  ev.type = "hold";
  ev.t0 = ev.t1 = t0;
  ev.clock_seconds = clock_seconds;
  double ts;
  hold_discretization(clock_seconds, h, ev.steps, ts);
  return ev;
}

Event measure_event(const std::string& tag, double t0) {
  Event ev;
  ev.type = "measure";
  ev.t0 = ev.t1 = t0;
  ev.tag = tag;
  return ev;
}

// Tent fold: both halves rotate rigidly about the center column so the full
// fold angle lands on the single center hinge column.
Scenario single_wrinkle(const ScenarioOptions& opt, double default_fold) {
  Scenario sc;
  sc.mesh.kind = "grid";
  const int res = default_res(opt.resolution, 61);
  sc.mesh.nx = sc.mesh.ny = res;
  sc.mesh.width = sc.mesh.height = 0.3;
  sc.material = opt.material;
  sc.model = opt.model;
  sc.solver.h = opt.h;
  sc.solver.damping = 2.0;
  sc.solver.gravity = Vec3::Zero();
  const double fold = opt.fold_angle > 0 ? opt.fold_angle : default_fold;
  const int ic = (res - 1) / 2;
  const double cx = sc.mesh.width / 2.0;
  const HandleMotion rot_l{"rotate", Vec3::Zero(), Vec3(cx, 0, 0), Vec3::UnitY(), fold / 2};
  const HandleMotion rot_r{"rotate", Vec3::Zero(), Vec3(cx, 0, 0), Vec3::UnitY(), -fold / 2};
  sc.events.push_back(instant_event("pin", 0.0, grid_column(res, res, ic)));
  sc.events.push_back(handles_event(grid_half(res, res, 0, ic), rot_l, 0.0, 1.0));
  sc.events.push_back(handles_event(grid_half(res, res, ic + 1, res), rot_r, 0.0, 1.0));
  Event hold = hold_event(1.0, opt.hold_seconds, opt.h);
  sc.events.push_back(hold);
  const double t_rel = 1.0 + hold.steps * opt.h;
  sc.events.push_back(measure_event("held", t_rel));
  sc.events.push_back(instant_event("release_handles", t_rel));
  sc.events.push_back(measure_event("final", t_rel + 10.0));
  sc.duration = t_rel + 10.0;
  return sc;
}

Scenario press_weight(const ScenarioOptions& opt) {
  Scenario sc;
  sc.name = "press_weight";
  sc.mesh.kind = "grid";
  const int res = default_res(opt.resolution, 61);
  sc.mesh.nx = sc.mesh.ny = res;
  sc.mesh.width = sc.mesh.height = 0.3;
  sc.material = opt.material;
  sc.model = opt.model;
  sc.solver.h = opt.h;
  sc.solver.damping = 3.0;
  sc.solver.gravity = Vec3(0, 0, -9.8);
  sc.solver.cg_max_iters = 4000;
  const double fold = opt.fold_angle > 0 ? opt.fold_angle : M_PI - 0.3;
  const int ic = (res - 1) / 2;
  const double cx = sc.mesh.width / 2.0;
  const double th = sc.solver.contact.thickness;

  // floor shell surface at z = 0 so the flat sheet starts exactly resting
  Obstacle floor;
  floor.shape = Obstacle::Shape::plane;
  floor.name = "floor";
  floor.p = Vec3(0, 0, -th);
  floor.n = Vec3::UnitZ();
  sc.obstacles.push_back(floor);

  Obstacle box;
  box.shape = Obstacle::Shape::box;
  box.name = "press";
  box.half = Vec3(0.1, 0.18, 0.01);
  box.p = Vec3(cx / 2, sc.mesh.height / 2, 0.3 + box.half.z());  // parked above the swing arc
  Event hold = hold_event(2.5, opt.hold_seconds, opt.h);
  const double t_held = 2.5 + hold.steps * opt.h;
  // bottom face descends into the floor shell band, squeezing the fold flat
  const double press_z = (0.5 * th + box.half.z()) - box.p.z();
  box.track = {{2.0, Vec3::Zero()},
               {2.5, Vec3(0, 0, press_z)},
               {t_held, Vec3(0, 0, press_z)},
               {t_held + 0.3, Vec3::Zero()}};
  sc.obstacles.push_back(box);

  // fold the right half over the left; left half pinned flat during the fold
  const HandleMotion rot_r{"rotate", Vec3::Zero(), Vec3(cx, 0, 0), Vec3::UnitY(), -fold};
  sc.events.push_back(instant_event("pin", 0.0, grid_half(res, res, 0, ic + 1)));
  sc.events.push_back(handles_event(grid_half(res, res, ic + 1, res), rot_r, 0.0, 1.5));
  sc.events.push_back(instant_event("release_handles", 1.7));
  sc.events.push_back(hold);
  sc.events.push_back(measure_event("held", t_held));
  // swing the folded-over layer back open so only the internal state keeps
  // the crease, then hang the sheet by the edge perpendicular to the crease:
  // the crease line ends up vertical, gravity acts in-plane and cannot crush
  // the ridge, whose angle then reads out the stored state
  const double t_open = t_held + 0.5;
  sc.events.push_back(instant_event("unpin", t_open, grid_half(res, res, 0, ic + 1)));
  const HandleMotion unfold{"rotate", Vec3::Zero(), Vec3(cx, 0, 0), Vec3::UnitY(), fold};
  sc.events.push_back(handles_event(grid_column(res, res, res - 1), unfold, t_open, t_open + 1.5));
  sc.events.push_back(instant_event("release_handles", t_open + 1.7));
  const double t_hang = t_open + 2.0;
  std::vector<int> top_row;
  for (int i = 0; i < res; ++i) top_row.push_back(i);
  HandleMotion raise{"translate", Vec3(0, 0, 0.35), Vec3::Zero(), Vec3::UnitZ(), 0};
  sc.events.push_back(handles_event(top_row, raise, t_hang, t_hang + 1.0));
  sc.events.push_back(measure_event("final", t_hang + 2.5));
  sc.duration = t_hang + 2.5;
  sc.crease_threshold = 1.0;  // isolate the fold line from pressing ripples
  return sc;
}

// The sheet starts above a short open cylinder and a kinematic ball stuffs it
// through the mouth; the crumpled pile rests inside during the hold and two
// corners then pull it back out.
Scenario fold_drop_container(const ScenarioOptions& opt) {
  Scenario sc;
  sc.name = "fold_drop_container";
  sc.mesh.kind = "grid";
  const int res = default_res(opt.resolution, 41);
  sc.mesh.nx = sc.mesh.ny = res;
  sc.mesh.width = sc.mesh.height = 0.25;
  sc.mesh.z0 = 0.16;
  sc.material = opt.material;
  sc.model = opt.model;
  sc.solver.h = opt.h;
  sc.solver.damping = 1.5;
  sc.solver.gravity = Vec3(0, 0, -9.8);
  sc.solver.cg_max_iters = 4000;
  const double th = sc.solver.contact.thickness;
  const Vec3 center(sc.mesh.width / 2, sc.mesh.height / 2, 0);

  Obstacle floor;
  floor.shape = Obstacle::Shape::plane;
  floor.name = "floor";
  floor.p = Vec3(0, 0, -th);
  sc.obstacles.push_back(floor);

  Obstacle tube;
  tube.shape = Obstacle::Shape::tube;
  tube.name = "container";
  tube.p = center;
  tube.radius = 0.09;
  tube.half = Vec3(0, 0, 0.12);
  sc.obstacles.push_back(tube);

  Event hold = hold_event(3.4, opt.hold_seconds, opt.h);
  const double t_held = 3.4 + hold.steps * opt.h;

  // ball dips to the mouth while the corners are pinned, then pushes the
  // sheet through once they let go, dwells on the pile and retreats
  Obstacle ball;
  ball.shape = Obstacle::Shape::sphere;
  ball.name = "stuffer";
  ball.radius = 0.05;
  ball.p = center + Vec3(0, 0, 0.23);
  ball.track = {{0.0, Vec3::Zero()},
                {0.6, Vec3(0, 0, 0.14 - ball.p.z())},
                {1.6, Vec3(0, 0, 0.07 - ball.p.z())},
                {2.2, Vec3(0, 0, 0.07 - ball.p.z())},
                {3.0, Vec3(0, 0, 0.37)}};
  sc.obstacles.push_back(ball);

  const std::vector<int> corners = {0, res - 1, res * (res - 1), res * res - 1};
  sc.events.push_back(instant_event("pin", 0.0, corners));
  sc.events.push_back(instant_event("unpin", 0.6, corners));
  sc.events.push_back(hold);
  sc.events.push_back(measure_event("held", t_held));
  HandleMotion lift{"translate", Vec3(0, -0.08, 0.35), Vec3::Zero(), Vec3::UnitZ(), 0};
  sc.events.push_back(handles_event({0, res - 1}, lift, t_held, t_held + 1.5));
  sc.events.push_back(measure_event("final", t_held + 3.0));
  sc.duration = t_held + 3.0;
  return sc;
}

Scenario cylinder_twist(const ScenarioOptions& opt) {
  Scenario sc;
  sc.name = "cylinder_twist";
  sc.mesh.kind = "cylinder";
  const int na = opt.resolution > 0 ? std::max(opt.resolution, 8) : 48;
  sc.mesh.n_around = na;
  sc.mesh.n_along = std::max(na / 2, 4);
  sc.mesh.radius = 0.05;
  sc.mesh.length = 0.2;
  sc.material = opt.material;
  sc.model = opt.model;
  sc.solver.h = opt.h;
  sc.solver.damping = 2.0;
  sc.solver.gravity = Vec3::Zero();
  sc.record_torque = true;
  sc.torque_point = Vec3::Zero();
  sc.torque_axis = Vec3::UnitZ();
  // large enough that every preset buckles into twist wrinkles
  const double twist = opt.twist_angle > 0 ? opt.twist_angle : 0.75 * M_PI;
  const int top = sc.mesh.n_along - 1;
  const HandleMotion rot{"rotate", Vec3::Zero(), Vec3::Zero(), Vec3::UnitZ(), twist};
  const HandleMotion unrot{"rotate", Vec3::Zero(), Vec3::Zero(), Vec3::UnitZ(), -twist};
  sc.events.push_back(instant_event("pin", 0.0, cylinder_ring(na, 0)));
  sc.events.push_back(handles_event(cylinder_ring(na, top), rot, 0.0, 1.0));
  Event hold = hold_event(1.0, opt.hold_seconds, opt.h);
  sc.events.push_back(hold);
  const double t_held = 1.0 + hold.steps * opt.h;
  sc.events.push_back(measure_event("held", t_held));
  sc.events.push_back(instant_event("release_handles", t_held));
  sc.events.push_back(handles_event(cylinder_ring(na, top), unrot, t_held, t_held + 1.0));
  sc.events.push_back(instant_event("release_handles", t_held + 1.2));
  sc.events.push_back(measure_event("final", t_held + 4.2));
  sc.duration = t_held + 4.2;
  return sc;
}

Scenario tensile_center_press(const ScenarioOptions& opt) {
  Scenario sc;
  sc.name = "tensile_center_press";
  sc.mesh.kind = "grid";
  const int res = default_res(opt.resolution, 41);
  sc.mesh.nx = sc.mesh.ny = res;
  sc.mesh.width = sc.mesh.height = 0.3;
  sc.material = opt.material;
  sc.model = opt.model;
  sc.solver.h = opt.h;
  sc.solver.damping = 3.0;
  sc.solver.gravity = Vec3::Zero();
  sc.solver.cg_max_iters = 4000;
  // strong tensile friction/plastic so membrane persistence is visible
  Material mat = material_preset(opt.material);
  mat.has_tensile = true;
  mat.tensile = {0.3 * mat.K11, 0.3 * mat.K22, 0.3 * mat.K33, 0.005, 0.05, 0.05};
  mat.name = mat.name + "_tensile_demo";
  sc.material_override = material_to_json(mat);

  Obstacle ball;
  ball.shape = Obstacle::Shape::sphere;
  ball.name = "press_ball";
  ball.radius = 0.05;
  ball.p = Vec3(sc.mesh.width / 2, sc.mesh.height / 2, ball.radius + 0.02);
  Event hold = hold_event(1.5, opt.hold_seconds, opt.h);
  const double t_held = 1.5 + hold.steps * opt.h;
  const double push = -(0.02 + 0.06);  // press the center well below the plane
  ball.track = {{0.0, Vec3::Zero()},
                {1.5, Vec3(0, 0, push)},
                {t_held, Vec3(0, 0, push)},
                {t_held + 0.5, Vec3::Zero()}};
  sc.obstacles.push_back(ball);

  sc.events.push_back(instant_event("pin", 0.0, grid_border(res, res)));
  sc.events.push_back(hold);
  sc.events.push_back(measure_event("held", t_held));
  sc.events.push_back(measure_event("final", t_held + 2.5));
  sc.duration = t_held + 2.5;
  return sc;
}

}  // namespace

std::vector<std::string> canonical_scenario_names() {
  return {"single_wrinkle_friction", "single_wrinkle_plastic", "fold_drop_container",
          "press_weight",            "tensile_center_press",   "cylinder_twist"};
}

Scenario make_canonical(const std::string& name, const ScenarioOptions& opt) {
  if (name == "single_wrinkle_friction") {
    Scenario sc = single_wrinkle(opt, 0.8);  // stays below every preset's yield
    sc.name = name;
    return sc;
  }
  if (name == "single_wrinkle_plastic") {
    Scenario sc = single_wrinkle(opt, 2.4);  // beyond the specimen yields
    sc.name = name;
    return sc;
  }
  if (name == "fold_drop_container") return fold_drop_container(opt);
  if (name == "press_weight") return press_weight(opt);
  if (name == "tensile_center_press") return tensile_center_press(opt);
  if (name == "cylinder_twist") return cylinder_twist(opt);
  std::string msg = "unknown scenario '" + name + "'; canonical:";
  for (const auto& n : canonical_scenario_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

}  // namespace crease
