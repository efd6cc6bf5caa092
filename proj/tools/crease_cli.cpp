// crease: persistent-wrinkle cloth simulator command line.
//
//   crease simulate --scenario single_wrinkle_friction --material cotton --hold 500 --out runs/x
//   crease sweep    --scenario single_wrinkle_friction --holds 1,10,100,1000 --materials cotton
//   crease bench    --sizes 2000,7000 --steps 50 --out runs/bench
//   crease validate --scenario file.json | --material file.json
//   crease mesh     --kind grid --nx 61 --ny 61 --out grid.obj
//
// Exit codes: 0 success, 1 solver failure, 2 configuration error.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crease/metrics.hpp"
#include "crease/obj_io.hpp"
#include "crease/scenario.hpp"

namespace {

using namespace crease;

int fail_config(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

Scenario resolve_scenario(const std::string& name_or_path, const ScenarioOptions& opt) {
  if (name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json") {
    Scenario sc = load_scenario_file(name_or_path);
    if (opt.h != 0.01) sc.solver.h = opt.h;
    if (!opt.material.empty()) sc.material = opt.material;
    sc.model = opt.model;
    return sc;
  }
  return make_canonical(name_or_path, opt);
}

void check_material(const std::string& name) {
  for (const std::string& p : material_preset_names())
    if (p == name) return;
  std::string msg = "unknown material '" + name + "'; presets:";
  for (const std::string& p : material_preset_names()) msg += " " + p;
  throw std::invalid_argument(msg);
}

void report_warnings(const RunResult& rr, double h) {
  if (rr.step_size_warning)
    std::fprintf(stderr,
                 "warning: friction anchors jumped past the per-step guard %ld time(s) at h=%g; "
                 "the stick-slip traces are unreliable, reduce the step size\n",
                 rr.guard_trips, h);
}

int cmd_simulate(const std::string& scenario, ScenarioOptions opt, const std::string& out,
                 unsigned long seed, double jitter, int obj_every) {
  Scenario sc;
  try {
    check_material(opt.material);
    sc = resolve_scenario(scenario, opt);
    sc.obj_every = obj_every;
    if (seed != 0) {
      sc.mesh.seed = seed;
      sc.mesh.jitter = jitter > 0 ? jitter : 1e-4;
    }
  } catch (const std::exception& e) {
    return fail_config(e.what());
  }
  try {
    const RunResult rr = run_scenario(sc, out);
    report_warnings(rr, sc.solver.h);
    const ResidualSummary s = residual_summary(rr, sc.crease_threshold);
    std::printf("scenario   %s\nmaterial   %s\nmodel      %s\n", sc.name.c_str(),
                sc.material.c_str(), sc.model.c_str());
    std::printf("creases    %d hinges past %.3g rad\n", s.crease_hinges, sc.crease_threshold);
    std::printf("held mean  %.6g rad\nfinal mean %.6g rad\nrecovery   %.4g %%\n", s.held_mean,
                s.final_mean, s.recovery_pct);
    if (!out.empty()) std::printf("artifacts  %s\n", out.c_str());
    return 0;
  } catch (const std::invalid_argument& e) {
    return fail_config(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 1;
  }
}

int cmd_sweep(const std::string& scenario, std::vector<double> holds,
              std::vector<std::string> materials, ScenarioOptions base, const std::string& out) {
  if (holds.size() < 2) return fail_config("sweep needs at least two hold durations");
  std::sort(holds.begin(), holds.end());
  try {
    for (const std::string& m : materials) check_material(m);
  } catch (const std::exception& e) {
    return fail_config(e.what());
  }
  std::filesystem::create_directories(out.empty() ? "." : out);
  int failures = 0;
  for (const std::string& m : materials) {
    try {
      const std::vector<RecoveryPoint> pts = recovery_curve(scenario, m, holds, base);
      const std::string path =
          (out.empty() ? std::string(".") : out) + "/recovery_" + m + ".csv";
      write_recovery_csv(path, pts);
      std::printf("%s:\n", m.c_str());
      for (const RecoveryPoint& p : pts)
        std::printf("  hold %8g s  held %.5g  final %.5g  recovery %.4g %%\n", p.hold_seconds,
                    p.held_mean, p.final_mean, p.recovery_pct);
      std::printf("  -> %s\n", path.c_str());
    } catch (const std::exception& e) {
      std::fprintf(stderr, "sweep cell failed (%s): %s\n", m.c_str(), e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_bench(const std::vector<int>& sizes, int steps, const std::string& out) {
  for (int n : sizes)
    if (n <= 0) return fail_config("bench sizes must be positive vertex counts");
  if (sizes.empty()) return fail_config("bench needs at least one size");
  try {
    const std::vector<BenchRow> rows = timing_report(sizes, steps);
    std::printf("%10s %14s %8s %14s\n", "vertices", "model", "steps", "ms/step");
    for (const BenchRow& r : rows)
      std::printf("%10d %14s %8d %14.3f\n", r.vertices, r.model.c_str(), r.steps,
                  1e3 * r.sec_per_step);
    for (size_t k = 0; k + 1 < rows.size(); k += 2)
      std::printf("overhead at %d vertices: %.1f %%\n", rows[k].vertices,
                  100.0 * (rows[k + 1].sec_per_step / rows[k].sec_per_step - 1.0));
    if (!out.empty()) {
      std::filesystem::create_directories(out);
      write_timing_csv(out + "/timing.csv", rows);
      std::printf("-> %s/timing.csv\n", out.c_str());
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    return fail_config(e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bench failure: %s\n", e.what());
    return 1;
  }
}

int cmd_validate(const std::string& scenario_path, const std::string& material_path) {
  if (scenario_path.empty() && material_path.empty())
    return fail_config("validate needs --scenario or --material");
  try {
    if (!material_path.empty()) {
      const Material m = load_material_file(material_path);
      validate_material(m);
      std::printf("material '%s' valid\n", m.name.c_str());
    }
    if (!scenario_path.empty()) {
      const Scenario sc = load_scenario_file(scenario_path);
      Sim sim = build_sim(sc);  // builds mesh + validates material and solver config
      if (sc.duration <= 0) throw std::invalid_argument("scenario duration must be positive");
      for (const Event& ev : sc.events)
        for (int v : ev.verts)
          if (v < 0 || v >= sim.mesh.nv())
            throw std::invalid_argument("event references vertex " + std::to_string(v) +
                                        " outside the mesh");
      std::printf("scenario '%s' valid: %d vertices, %d faces, %d hinges, %zu events\n",
                  sc.name.c_str(), sim.mesh.nv(), sim.mesh.nf(), sim.mesh.nh(),
                  sc.events.size());
    }
    return 0;
  } catch (const std::exception& e) {
    return fail_config(e.what());
  }
}

int cmd_mesh(const std::string& kind, int nx, int ny, double width, double height, double radius,
             double length, const std::string& out) {
  try {
    ClothMesh m;
    if (kind == "grid")
      m = build_grid(width, height, nx, ny, 0.1);
    else if (kind == "cylinder")
      m = build_cylinder(radius, length, nx, ny, 0.1);
    else
      throw std::invalid_argument("mesh kind must be grid or cylinder");
    write_obj(out, m.X, m.F);
    std::printf("wrote %s: %d vertices, %d faces, %d hinges\n", out.c_str(), m.nv(), m.nf(),
                m.nh());
    return 0;
  } catch (const std::exception& e) {
    return fail_config(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crease: wrinkle-memory cloth simulator"};
  app.require_subcommand(1);
  int threads = 1;  // reserved; this build is single-threaded and deterministic
  app.add_option("--threads", threads, "worker threads (this build always runs one)");

  ScenarioOptions opt;
  std::string scenario = "single_wrinkle_friction", out, material_file;
  unsigned long seed = 0;
  double jitter = 0;
  int obj_every = 0;

  CLI::App* sim = app.add_subcommand("simulate", "run one scenario and report wrinkle metrics");
  sim->add_option("--scenario", scenario, "canonical name or a scenario .json file");
  sim->add_option("--material", opt.material, "material preset name");
  sim->add_option("--model", opt.model, "elastic | anchor | dahl | hardening_only");
  sim->add_option("--hold", opt.hold_seconds, "accelerated hold duration, s");
  sim->add_option("--res", opt.resolution, "grid vertices per side (0 = scenario default)");
  sim->add_option("--dt", opt.h, "step size, s");
  sim->add_option("--fold", opt.fold_angle, "fold angle override, rad");
  sim->add_option("--twist", opt.twist_angle, "twist angle override, rad");
  sim->add_option("--out", out, "artifact directory (empty = metrics to stdout only)");
  sim->add_option("--seed", seed, "mesh jitter seed (0 = regular mesh)");
  sim->add_option("--jitter", jitter, "jitter amplitude, m");
  sim->add_option("--obj-every", obj_every, "write an OBJ frame every N steps");

  std::vector<double> holds = {1, 10, 100, 1000};
  std::vector<std::string> materials = {"cotton"};
  CLI::App* sweep = app.add_subcommand("sweep", "recovery vs hold duration, one csv per material");
  sweep->add_option("--scenario", scenario, "canonical scenario name");
  sweep->add_option("--holds", holds, "hold durations, s")->delimiter(',');
  sweep->add_option("--materials", materials, "material presets")->delimiter(',');
  sweep->add_option("--res", opt.resolution, "grid vertices per side");
  sweep->add_option("--dt", opt.h, "step size, s");
  sweep->add_option("--model", opt.model, "constitutive model");
  sweep->add_option("--out", out, "output directory");

  std::vector<int> sizes = {2000};
  int steps = 50;
  CLI::App* bench = app.add_subcommand("bench", "per-step cost with and without wrinkle memory");
  bench->add_option("--sizes", sizes, "approximate vertex counts")->delimiter(',');
  bench->add_option("--steps", steps, "timed steps per row");
  bench->add_option("--out", out, "output directory for timing.csv");

  std::string val_scenario;
  CLI::App* validate = app.add_subcommand("validate", "check a scenario or material file");
  validate->add_option("--scenario", val_scenario, "scenario .json to check");
  validate->add_option("--material", material_file, "material .json to check");

  std::string kind = "grid", mesh_out = "mesh.obj";
  int nx = 61, ny = 61;
  double width = 0.3, height = 0.3, radius = 0.05, length = 0.2;
  CLI::App* mesh = app.add_subcommand("mesh", "export a generated mesh as OBJ");
  mesh->add_option("--kind", kind, "grid | cylinder");
  mesh->add_option("--nx", nx, "vertices along x / around");
  mesh->add_option("--ny", ny, "vertices along y / rings");
  mesh->add_option("--width", width, "grid width, m");
  mesh->add_option("--height", height, "grid height, m");
  mesh->add_option("--radius", radius, "cylinder radius, m");
  mesh->add_option("--length", length, "cylinder length, m");
  mesh->add_option("--out", mesh_out, "output OBJ path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; parse problems are config errors
  }

  if (sim->parsed()) return cmd_simulate(scenario, opt, out, seed, jitter, obj_every);
  if (sweep->parsed()) return cmd_sweep(scenario, holds, materials, opt, out);
  if (bench->parsed()) return cmd_bench(sizes, steps, out);
  if (validate->parsed()) return cmd_validate(val_scenario, material_file);
  if (mesh->parsed()) return cmd_mesh(kind, nx, ny, width, height, radius, length, mesh_out);
  return 2;
}
