#include "crease/material.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace crease {

TensileParams Material::tensile_effective() const {
  if (has_tensile) return tensile;
  TensileParams t;
  t.K11f = t.K22f = t.K33f = Kfriction();
  t.eps0t = eps0;
  t.epsInft = epsInf;
  t.epsY0t = epsY0;
  return t;
}

namespace {

Material make(const std::string& name, double rho, double kb3, double k11, double k22,
              double k12, double k33, double kf3, double e0, double einf, double tf,
              double kh0, double g, double tp, double ey0) {
  Material m;
  m.name = name;
  m.rho = rho;
  m.kb3 = kb3;
  m.K11 = k11;
  m.K22 = k22;
  m.K12 = k12;
  m.K33 = k33;
  m.kfriction3 = kf3;
  m.eps0 = e0;
  m.epsInf = einf;
  m.tauF = tf;
  m.Kh0 = kh0;
  m.g = g;
  m.tauP = tp;
  m.epsY0 = ey0;
  return m;
}

}  // namespace

std::vector<std::string> material_preset_names() {
  return {"cotton", "denim", "polyester", "cotton_garment", "denim_garment", "polyester_garment"};
}

Material material_preset(const std::string& name) {
  // specimen-scale fits
  if (name == "cotton")
    return make(name, 0.06, 5e-6, 50, 50, 0.2, 30, 1e-5, 0.1, 1.7, 30, 5e-6, 0.99, 30, 1.8);
  if (name == "denim")
    return make(name, 0.25, 1.2e-4, 100, 100, 0.2, 20, 5e-5, 0.1, 1.8, 30, 1.2e-4, 0.99, 30, 2.0);
  if (name == "polyester")
    return make(name, 0.18, 1.2e-4, 50, 50, 0.2, 30, 1e-7, 0.01, 0.1, 30, 1.2e-4, 0.99, 30, 3.0);
  // garment-scale fits
  if (name == "cotton_garment")
    return make(name, 0.1, 1e-6, 200, 200, 0.2, 20, 4e-6, 0.1, 1.2, 30, 1e-6, 0.99, 30, 1.5);
  if (name == "denim_garment")
    return make(name, 0.2, 3e-5, 200, 200, 0.2, 150, 6e-5, 0.2, 1.2, 30, 3e-5, 0.99, 30, 1.2);
  if (name == "polyester_garment")
    return make(name, 0.15, 1e-6, 100, 100, 0.2, 20, 7e-7, 0.1, 0.1, 30, 1e-6, 0.99, 30, 3.1);
  std::string msg = "unknown material '" + name + "'; presets:";
  for (const auto& n : material_preset_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

void validate_material(const Material& m) {
  std::string bad;
  auto req = [&bad](bool ok, const char* what) {
    if (!ok) bad += std::string(bad.empty() ? "" : "; ") + what;
  };
  auto fin = [](double v) { return std::isfinite(v); };
  req(fin(m.rho) && m.rho > 0, "rho must be > 0");
  req(fin(m.kb3) && m.kb3 > 0, "Kb3 must be > 0");
  req(fin(m.K11) && m.K11 > 0, "K11 must be > 0");
  req(fin(m.K22) && m.K22 > 0, "K22 must be > 0");
  req(fin(m.K33) && m.K33 > 0, "K33 must be > 0");
  req(fin(m.K12) && m.K11 * m.K22 >= m.K12 * m.K12,
      "membrane stiffness must be positive semidefinite (K11*K22 >= K12^2)");
  req(fin(m.kfriction3) && m.kfriction3 >= 0, "KFriction3 must be >= 0");
  req(fin(m.eps0) && m.eps0 > 0, "eps0 must be > 0");
  req(fin(m.epsInf) && m.epsInf >= m.eps0, "epsInf must be >= eps0");
  req(fin(m.tauF) && m.tauF > 0, "tauF must be > 0");
  req(fin(m.Kh0) && m.Kh0 >= 0, "Kh0 must be >= 0");
  req(fin(m.g) && m.g > 0 && m.g < 1, "g must be in (0,1)");
  req(fin(m.tauP) && m.tauP > 0, "tauP must be > 0");
  req(fin(m.epsY0) && m.epsY0 > 0, "epsY0 must be > 0");
  if (m.has_tensile) {
    const TensileParams& t = m.tensile;
    req(fin(t.K11f) && t.K11f >= 0 && fin(t.K22f) && t.K22f >= 0 && fin(t.K33f) && t.K33f >= 0,
        "tensile friction stiffness must be >= 0");
    req(fin(t.eps0t) && t.eps0t > 0, "eps0t must be > 0");
    req(fin(t.epsInft) && t.epsInft >= t.eps0t, "epsInft must be >= eps0t");
    req(fin(t.epsY0t) && t.epsY0t > 0, "epsY0t must be > 0");
  }
  if (!bad.empty()) throw std::invalid_argument("invalid material '" + m.name + "': " + bad);
}

nlohmann::json material_to_json(const Material& m) {
  nlohmann::json j{{"name", m.name},     {"rho", m.rho},         {"Kb3", m.kb3},
                   {"K11", m.K11},       {"K22", m.K22},         {"K12", m.K12},
                   {"K33", m.K33},       {"KFriction3", m.kfriction3},
                   {"eps0", m.eps0},     {"epsInf", m.epsInf},   {"tauF", m.tauF},
                   {"Kh0", m.Kh0},       {"g", m.g},             {"tauP", m.tauP},
                   {"epsY0", m.epsY0}};
  if (m.has_tensile) {
    j["tensile"] = {{"K11f", m.tensile.K11f}, {"K22f", m.tensile.K22f},
                    {"K33f", m.tensile.K33f}, {"eps0t", m.tensile.eps0t},
                    {"epsInft", m.tensile.epsInft}, {"epsY0t", m.tensile.epsY0t}};
  }
  return j;
}

Material material_from_json(const nlohmann::json& j) {
  Material m;
  m.name = j.value("name", "custom");
  m.rho = j.at("rho");
  m.kb3 = j.at("Kb3");
  m.K11 = j.at("K11");
  m.K22 = j.at("K22");
  m.K12 = j.at("K12");
  m.K33 = j.at("K33");
  m.kfriction3 = j.at("KFriction3");
  m.eps0 = j.at("eps0");
  m.epsInf = j.at("epsInf");
  m.tauF = j.at("tauF");
  m.Kh0 = j.at("Kh0");
  m.g = j.at("g");
  m.tauP = j.at("tauP");
  m.epsY0 = j.at("epsY0");
  if (j.contains("tensile")) {
    const auto& t = j.at("tensile");
    m.has_tensile = true;
    m.tensile.K11f = t.at("K11f");
    m.tensile.K22f = t.at("K22f");
    m.tensile.K33f = t.at("K33f");
    m.tensile.eps0t = t.at("eps0t");
    m.tensile.epsInft = t.at("epsInft");
    m.tensile.epsY0t = t.at("epsY0t");
  }
  return m;
}

Material load_material_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open material file: " + path);
  nlohmann::json j;
  in >> j;
  Material m = material_from_json(j);
  validate_material(m);
  return m;
}

}  // namespace crease
