#include "crease/metrics.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace crease {

double recovery_percent(double held_dev, double final_dev) {
  if (std::abs(held_dev) <= 1e-6)
    throw std::invalid_argument("recovery undefined: no held deformation");
  return 100.0 * (1.0 - std::abs(final_dev) / std::abs(held_dev));
}

std::vector<int> crease_set(const MeasureRecord& held, double threshold) {
  std::vector<int> set;
  for (size_t i = 0; i < held.dev.size(); ++i)
    if (std::abs(held.dev[i]) > threshold) set.push_back(static_cast<int>(i));
  return set;
}

WrinkleStats stats_over(const std::vector<double>& dev, const std::vector<int>& subset) {
  WrinkleStats s;
  for (int i : subset) {
    const double d = std::abs(dev[i]);
    s.mean_dev += d;
    s.max_dev = std::max(s.max_dev, d);
  }
  s.count = static_cast<int>(subset.size());
  if (s.count > 0) s.mean_dev /= s.count;
  return s;
}

WrinkleStats stats_all(const std::vector<double>& dev) {
  WrinkleStats s;
  for (double v : dev) {
    const double d = std::abs(v);
    s.mean_dev += d;
    s.max_dev = std::max(s.max_dev, d);
  }
  s.count = static_cast<int>(dev.size());
  if (s.count > 0) s.mean_dev /= s.count;
  return s;
}

ResidualSummary residual_summary(const RunResult& rr, double crease_threshold,
                                 const std::string& held_tag, const std::string& final_tag) {
  const MeasureRecord* held = rr.find(held_tag);
  const MeasureRecord* fin = rr.find(final_tag);
  if (!held || !fin)
    throw std::invalid_argument("run lacks '" + held_tag + "'/'" + final_tag + "' measures");
  ResidualSummary s;
  const std::vector<int> set = crease_set(*held, crease_threshold);
  s.crease_hinges = static_cast<int>(set.size());
  if (set.empty()) return s;  // nothing creased: full recovery by convention
  s.held_mean = stats_over(held->dev, set).mean_dev;
  s.final_mean = stats_over(fin->dev, set).mean_dev;
  s.recovery_pct = recovery_percent(s.held_mean, s.final_mean);
  return s;
}

std::vector<RecoveryPoint> recovery_curve(const std::string& scenario_name,
                                          const std::string& material,
                                          const std::vector<double>& holds,
                                          const ScenarioOptions& base) {
  std::vector<RecoveryPoint> pts;
  for (double hs : holds) {
    ScenarioOptions opt = base;
    opt.material = material;
    opt.hold_seconds = hs;
    const Scenario sc = make_canonical(scenario_name, opt);
    const RunResult rr = run_scenario(sc);
    const ResidualSummary s = residual_summary(rr, sc.crease_threshold);
    pts.push_back({hs, s.held_mean, s.final_mean, s.recovery_pct});
  }
  return pts;
}

std::vector<BenchRow> timing_report(const std::vector<int>& vertex_counts, int steps) {
  if (steps < 1) throw std::invalid_argument("bench needs at least one step");
  std::vector<BenchRow> rows;
  for (int n : vertex_counts) {
    int res = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (res % 2 == 0) ++res;
    res = std::max(res, 5);
    for (const char* model : {"elastic", "anchor"}) {
      ScenarioOptions opt;
      opt.resolution = res;
      opt.model = model;
      Scenario sc = make_canonical("single_wrinkle_plastic", opt);
      Sim sim = build_sim(sc);
      // same folding load for every model: center column pinned, both halves
      // pulled toward the folded pose so the constitutive states keep moving
      const int ic = (res - 1) / 2;
      std::vector<int> column;
      for (int j = 0; j < res; ++j) column.push_back(j * res + ic);
      sim.pin(column);
      const Vec3 axis_point(sc.mesh.width / 2, 0, 0);
      for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i) {
          if (i == ic) continue;
          const double angle = i < ic ? 1.2 : -1.2;
          const Vec3 target =
              axis_point + Eigen::AngleAxisd(angle, Vec3::UnitY()) * (sim.mesh.X[j * res + i] - axis_point);
          sim.handles.push_back({j * res + i, target, 20.0});
        }
      for (int w = 0; w < 3; ++w) sim.step();  // untimed warmup
      const auto tic = std::chrono::steady_clock::now();
      for (int s = 0; s < steps; ++s) sim.step();
      const auto toc = std::chrono::steady_clock::now();
      const double sec = std::chrono::duration<double>(toc - tic).count();
      rows.push_back({res * res, model, steps, sec / steps});
    }
  }
  return rows;
}

void write_recovery_csv(const std::string& path, const std::vector<RecoveryPoint>& pts) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  std::fprintf(fp, "hold_seconds,held_mean,final_mean,recovery_pct\n");
  for (const RecoveryPoint& p : pts)
    std::fprintf(fp, "%.12g,%.12g,%.12g,%.12g\n", p.hold_seconds, p.held_mean, p.final_mean,
                 p.recovery_pct);
  std::fclose(fp);
}

void write_timing_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  std::fprintf(fp, "vertices,model,steps,sec_per_step\n");
  for (const BenchRow& r : rows)
    std::fprintf(fp, "%d,%s,%d,%.12g\n", r.vertices, r.model.c_str(), r.steps, r.sec_per_step);
  std::fclose(fp);
}

}  // namespace crease
