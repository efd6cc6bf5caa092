#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace crease {

// Friction/plastic thresholds for the membrane axes, in Green strain.
struct TensileParams {
  double K11f, K22f, K33f;  // per-axis friction stiffness
  double eps0t, epsInft;    // stick threshold range
  double epsY0t;            // initial yield strain
};

// Fabric parameters.  Field names mirror the material file keys; kb3 and
// kfriction3 hold the file values (3x the per-hinge stiffness) verbatim so a
// serialize/parse round trip is bit-exact, Kb()/Kfriction() divide by 3.
struct Material {
  std::string name = "custom";
  double rho;                    // areal density, kg/m^2
  double kb3;                    // 3 * bending stiffness
  double K11, K22, K12, K33;     // StVK membrane stiffness, N/m
  double kfriction3;             // 3 * bending friction stiffness
  double eps0, epsInf;           // stick threshold range, dihedral radians
  double tauF;                   // dwell time constant, s
  double Kh0, g, tauP;           // hardening start value, decay depth, time constant
  double epsY0;                  // initial yield, dihedral radians
  bool has_tensile = false;
  TensileParams tensile{};

  double Kb() const { return kb3 / 3.0; }
  double Kfriction() const { return kfriction3 / 3.0; }
  // Defaults reuse the bending thresholds and friction stiffness when no
  // tensile block is given.
  TensileParams tensile_effective() const;
};

std::vector<std::string> material_preset_names();
Material material_preset(const std::string& name);  // throws std::invalid_argument if unknown

// Throws std::invalid_argument listing every violated constraint.
void validate_material(const Material& m);

nlohmann::json material_to_json(const Material& m);
Material material_from_json(const nlohmann::json& j);
Material load_material_file(const std::string& path);

}  // namespace crease
