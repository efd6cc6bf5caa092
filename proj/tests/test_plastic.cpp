#include <doctest.h>

#include <cmath>

#include "crease/material.hpp"
#include "crease/plastic.hpp"

using namespace crease;

namespace {

PlasticParams cotton_bend() {
  const Material m = material_preset("cotton");
  return {m.Kb(), m.Kh0, m.g, m.tauP, m.epsY0};
}

}  // namespace

TEST_SUITE("plastic") {
  TEST_CASE("hardening decays from Kh0 toward Kh0*(1-g)") {
    const PlasticParams p = cotton_bend();
    CHECK(hardening(0, p) == doctest::Approx(p.Kh0).epsilon(1e-15));
    CHECK(hardening(p.tauP, p) / p.Kh0 == doctest::Approx(0.37420064675972786).epsilon(1e-12));
    CHECK(hardening(1e9, p) == doctest::Approx(p.Kh0 * (1 - p.g)).epsilon(1e-12));
    double prev = p.Kh0 + 1;
    for (double t = 0; t < 300; t += 2.0) {
      const double v = hardening(t, p);
      CHECK(v < prev);
      CHECK(v >= p.Kh0 * (1 - p.g));
      CHECK(v <= p.Kh0);
      prev = v;
    }
  }

  TEST_CASE("matched hardening converts exactly half the excess") {
    // with K_h == K_e the flow fraction Ke/(Ke+Kh) is exactly one half; g = 0
    // keeps K_h pinned there through the dwell update
    const PlasticParams p{2.0, 2.0, 0.0, 30.0, 1.0};
    PlasticState s;
    const double e = plastic_step(s, 1.5, 0.01, p);
    CHECK(s.eps_p == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.eps_hp == doctest::Approx(0.25).epsilon(1e-12));
    // yield grew by the hardened share, elastic return sits on it
    CHECK(s.eps_y == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(e == doctest::Approx(1.25).epsilon(1e-12));

    PlasticState f;
    const double ef = plastic_step_fixed_hardening(f, 1.5, p);
    CHECK(f.eps_p == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ef == doctest::Approx(1.25).epsilon(1e-12));
  }

  TEST_CASE("zero hardening is the perfect plastic limit") {
    const PlasticParams p{2.0, 0.0, 0.5, 30.0, 1.0};
    PlasticState s;
    const double e = plastic_step(s, 3.0, 0.01, p);
    // the whole excess flows; the stress returns to the yield surface
    CHECK(s.eps_p == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
    const double e2 = plastic_step(s, 3.0, 0.01, p);
    CHECK(e2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eps_p == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("no flow below yield and the dwell clock resets") {
    const PlasticParams p = cotton_bend();
    PlasticState s;
    s.t_plastic = 50;
    const double e = plastic_step(s, 0.5, 0.01, p);
    CHECK(e == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.eps_p == 0);
    CHECK(s.t_plastic == 0);
  }

  TEST_CASE("flow direction follows the elastic strain sign") {
    const PlasticParams p{1.0, 1.0, 0.0, 30.0, 1.0};
    PlasticState s;
    plastic_step(s, -2.0, 0.01, p);
    CHECK(s.eps_p == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(s.eps_hp == doctest::Approx(0.5).epsilon(1e-12));  // magnitude accumulates
    const double t_after = s.t_plastic;
    CHECK(t_after > 0);
    // pushing hard the other way flows opposite and restarts the dwell clock
    plastic_step(s, 2.0, 0.01, p);
    CHECK(s.eps_p > -0.5);
    CHECK(s.t_plastic <= 0.01);
  }

  TEST_CASE("held load converges onto the yield surface and stays there") {
    const PlasticParams p = cotton_bend();
    PlasticState s;
    const double load = 3.0;
    int steps = 0;
    for (; steps < 100000; ++steps) {
      plastic_step(s, load, 0.01, p);
      if (std::abs(load - s.eps_p) <= s.eps_y + 1e-12) break;
    }
    CHECK(steps < 100000);
    // every later update keeps the elastic strain on or inside the surface
    for (int i = 0; i < 1000; ++i) {
      const double e = plastic_step(s, load, 0.01, p);
      CHECK(std::abs(e) <= s.eps_y + 1e-12);
    }
  }

  TEST_CASE("long holds approach the saturated-hardening fixed point") {
    const PlasticParams p = cotton_bend();
    PlasticState s;
    const double load = 3.0;
    for (int i = 0; i < 100000; ++i) plastic_step(s, load, 0.1, p);  // 10000 s of dwell
    const double ratio_inf = p.Kh0 * (1 - p.g) / p.Ke;
    const double fixed_point = (load - p.epsY0) / (1 + ratio_inf);
    CHECK(s.eps_p == doctest::Approx(fixed_point).epsilon(1e-6));
  }

  TEST_CASE("longer dwell leaves more plastic strain") {
    const PlasticParams p = cotton_bend();
    PlasticState brief, dwelled;
    for (int i = 0; i < 50; ++i) plastic_step(brief, 3.0, 0.02, p);     // 1 s
    for (int i = 0; i < 50; ++i) plastic_step(dwelled, 3.0, 10.0, p);   // 500 s
    CHECK(dwelled.eps_p > brief.eps_p * 1.2);
  }

  TEST_CASE("fixed hardening matches the full law when decay is disabled") {
    PlasticParams p = cotton_bend();
    p.g = 0.0;  // K_h pinned at Kh0: the dwell clock has no effect left
    PlasticState a, b;
    double ea = 0, eb = 0;
    for (int i = 0; i < 50; ++i) {
      ea = plastic_step(a, 2.6, 10.0, p);
      eb = plastic_step_fixed_hardening(b, 2.6, p);
    }
    CHECK(ea == eb);
    CHECK(a.eps_p == b.eps_p);
    CHECK(a.eps_hp == b.eps_hp);
    CHECK(a.eps_y == b.eps_y);
  }
}
