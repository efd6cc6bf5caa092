#pragma once

#include <string>
#include <vector>

#include "crease/scenario.hpp"

namespace crease {

// Percentage of the held deformation recovered after release; 100 means the
// crease vanished, 0 means it kept its held angle.  Magnitudes only.
double recovery_percent(double held_dev, double final_dev);

// Hinges whose held deviation exceeds the threshold; the persistent-wrinkle
// metrics are evaluated over this set.
std::vector<int> crease_set(const MeasureRecord& held, double threshold);
WrinkleStats stats_over(const std::vector<double>& dev, const std::vector<int>& subset);
WrinkleStats stats_all(const std::vector<double>& dev);

// Residual crease summary of a finished run: crease set from the "held"
// measure, residual from the "final" measure.
struct ResidualSummary {
  double held_mean = 0, final_mean = 0;
  double recovery_pct = 100;
  int crease_hinges = 0;
};
ResidualSummary residual_summary(const RunResult& rr, double crease_threshold,
                                 const std::string& held_tag = "held",
                                 const std::string& final_tag = "final");

struct RecoveryPoint {
  double hold_seconds = 0;
  double held_mean = 0, final_mean = 0;
  double recovery_pct = 100;
};
// Runs the named canonical scenario once per hold duration.
std::vector<RecoveryPoint> recovery_curve(const std::string& scenario_name,
                                          const std::string& material,
                                          const std::vector<double>& holds,
                                          const ScenarioOptions& base = {});

struct BenchRow {
  int vertices = 0;
  std::string model;
  int steps = 0;
  double sec_per_step = 0;
};
// Wall-clock cost of the constitutive models on a folding grid sized to
// approximately `vertices`; `elastic` rows are the reference.
std::vector<BenchRow> timing_report(const std::vector<int>& vertex_counts, int steps);

void write_recovery_csv(const std::string& path, const std::vector<RecoveryPoint>& pts);
void write_timing_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace crease
