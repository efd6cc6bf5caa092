#include <doctest.h>

#include <json.hpp>
#include <stdexcept>

#include "crease/material.hpp"

using namespace crease;

TEST_SUITE("material") {
  TEST_CASE("cotton preset values") {
    const Material m = material_preset("cotton");
    CHECK(m.rho == 0.06);
    CHECK(m.kb3 == 5e-6);
    CHECK(m.K11 == 50.0);
    CHECK(m.K22 == 50.0);
    CHECK(m.K12 == 0.2);
    CHECK(m.K33 == 30.0);
    CHECK(m.kfriction3 == 1e-5);
    CHECK(m.eps0 == 0.1);
    CHECK(m.epsInf == 1.7);
    CHECK(m.tauF == 30.0);
    CHECK(m.Kh0 == 5e-6);
    CHECK(m.g == 0.99);
    CHECK(m.tauP == 30.0);
    CHECK(m.epsY0 == 1.8);
    CHECK(m.Kb() == 5e-6 / 3.0);
    CHECK(m.Kfriction() == 1e-5 / 3.0);
  }

  TEST_CASE("all presets validate") {
    const auto names = material_preset_names();
    CHECK(names.size() == 6);
    for (const auto& n : names) CHECK_NOTHROW(validate_material(material_preset(n)));
    CHECK_THROWS_AS(material_preset("silk"), std::invalid_argument);
    try {
      material_preset("silk");
    } catch (const std::invalid_argument& e) {
      // the error lists the available presets
      CHECK(std::string(e.what()).find("cotton") != std::string::npos);
    }
  }

  TEST_CASE("denim and polyester rows") {
    const Material d = material_preset("denim");
    CHECK(d.rho == 0.25);
    CHECK(d.kb3 == 1.2e-4);
    CHECK(d.kfriction3 == 5e-5);
    CHECK(d.epsY0 == 2.0);
    const Material p = material_preset("polyester");
    CHECK(p.kfriction3 == 1e-7);
    CHECK(p.eps0 == 0.01);
    CHECK(p.epsInf == 0.1);
    CHECK(p.epsY0 == 3.0);
  }

  TEST_CASE("validation names every violated constraint") {
    Material m = material_preset("cotton");
    m.rho = -1;
    m.eps0 = 2.0;  // above epsInf
    m.g = 1.5;
    try {
      validate_material(m);
      CHECK(false);
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      CHECK(msg.find("rho") != std::string::npos);
      CHECK(msg.find("epsInf") != std::string::npos);
      CHECK(msg.find("g must") != std::string::npos);
    }
    Material nan = material_preset("cotton");
    nan.K11 = std::nan("");
    CHECK_THROWS_AS(validate_material(nan), std::invalid_argument);
    Material indef = material_preset("cotton");
    indef.K12 = 100.0;  // K11*K22 < K12^2
    CHECK_THROWS_AS(validate_material(indef), std::invalid_argument);
  }

  TEST_CASE("json round trip is bit exact") {
    for (const auto& n : material_preset_names()) {
      const Material a = material_preset(n);
      const Material b = material_from_json(material_to_json(a));
      CHECK(a.name == b.name);
      CHECK(a.rho == b.rho);
      CHECK(a.kb3 == b.kb3);
      CHECK(a.K11 == b.K11);
      CHECK(a.K22 == b.K22);
      CHECK(a.K12 == b.K12);
      CHECK(a.K33 == b.K33);
      CHECK(a.kfriction3 == b.kfriction3);
      CHECK(a.eps0 == b.eps0);
      CHECK(a.epsInf == b.epsInf);
      CHECK(a.tauF == b.tauF);
      CHECK(a.Kh0 == b.Kh0);
      CHECK(a.g == b.g);
      CHECK(a.tauP == b.tauP);
      CHECK(a.epsY0 == b.epsY0);
      CHECK(a.has_tensile == b.has_tensile);
    }
    // awkward but representable doubles survive the trip
    Material m = material_preset("cotton");
    m.kb3 = 0x1.fffffffffffffp-600;
    m.g = 1 - 0x1p-40;
    const Material r = material_from_json(material_to_json(m));
    CHECK(r.kb3 == m.kb3);
    CHECK(r.g == m.g);
  }

  TEST_CASE("tensile block round trip and defaults") {
    Material m = material_preset("cotton");
    CHECK_FALSE(m.has_tensile);
    const TensileParams def = m.tensile_effective();
    // without an explicit block the bending thresholds are reused
    CHECK(def.eps0t == m.eps0);
    CHECK(def.epsInft == m.epsInf);
    CHECK(def.epsY0t == m.epsY0);

    m.has_tensile = true;
    m.tensile = {15.0, 15.0, 9.0, 0.005, 0.05, 0.05};
    CHECK_NOTHROW(validate_material(m));
    const Material r = material_from_json(material_to_json(m));
    CHECK(r.has_tensile);
    CHECK(r.tensile.K11f == 15.0);
    CHECK(r.tensile.eps0t == 0.005);
    CHECK(r.tensile.epsY0t == 0.05);

    m.tensile.eps0t = 0.2;  // above epsInft
    CHECK_THROWS_AS(validate_material(m), std::invalid_argument);
  }
}
