#include <doctest.h>

#include <cmath>
#include <set>

#include "crease/mesh.hpp"

using namespace crease;

namespace {

// rest dihedral across the axial edges of an n-gon tube, from the chordal
// embedding with inward face normals
double prism_axial_dihedral(int n) { return M_PI - 2.0 * M_PI / n; }

Vec3 rand_vec(unsigned& state) {
  auto next = [&state]() {
    state = state * 1664525u + 1013904223u;
    return (state >> 8) * (1.0 / (1 << 24)) - 0.5;
  };
  double a = next(), b = next(), c = next();
  return Vec3(a, b, c);
}

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("grid counts, masses and rest state") {
    const ClothMesh m = build_grid(0.3, 0.2, 4, 3, 0.06);
    CHECK(m.nv() == 12);
    CHECK(m.nf() == 12);
    // interior edges only become hinges
    CHECK(m.nh() == 13);
    // Euler characteristic of a disk: V - E + F = 1 with E = hinges + boundary
    std::set<std::pair<int, int>> edges;
    for (const auto& f : m.F)
      for (int k = 0; k < 3; ++k) {
        int a = f[k], b = f[(k + 1) % 3];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
    CHECK(m.nv() - static_cast<int>(edges.size()) + m.nf() == 1);
    CHECK(m.total_mass() == doctest::Approx(0.06 * 0.3 * 0.2).epsilon(1e-12));
    for (const auto& hr : m.hinge_rest) CHECK(hr.rest_angle == doctest::Approx(M_PI));
    // uv frame equals the build plane
    for (int i = 0; i < m.nv(); ++i) {
      CHECK(m.UV[i].x() == doctest::Approx(m.X[i].x()));
      CHECK(m.UV[i].y() == doctest::Approx(m.X[i].y()));
    }
    for (double w : m.mass) CHECK(w > 0);
    CHECK(m.pinned == std::vector<std::uint8_t>(12, 0));
  }

  TEST_CASE("cylinder counts, welded seam and chordal rest angles") {
    const int na = 6, nl = 4;
    const ClothMesh m = build_cylinder(0.05, 0.2, na, nl, 0.1);
    CHECK(m.nv() == na * nl);
    CHECK(m.nf() == 2 * na * (nl - 1));
    CHECK(m.nh() == 48);
    // tube topology: V - E + F = 0
    std::set<std::pair<int, int>> edges;
    for (const auto& f : m.F)
      for (int k = 0; k < 3; ++k) {
        int a = f[k], b = f[(k + 1) % 3];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
    CHECK(m.nv() - static_cast<int>(edges.size()) + m.nf() == 0);
    int axial = 0;
    for (int h = 0; h < m.nh(); ++h) {
      const Hinge& hg = m.hinges[h];
      const Vec3 a = m.X[hg.v0], b = m.X[hg.v1];
      const bool same_spoke = (a - b).head<2>().norm() < 1e-12;
      if (same_spoke) {
        ++axial;
        CHECK(m.hinge_rest[h].rest_angle ==
              doctest::Approx(prism_axial_dihedral(na)).epsilon(1e-12));
      }
    }
    CHECK(axial == na * (nl - 1));
    // the rest embedding carries zero bending strain by construction
    for (int h = 0; h < m.nh(); ++h)
      CHECK(hinge_dihedral(m, m.hinges[h]) ==
            doctest::Approx(m.hinge_rest[h].rest_angle).epsilon(1e-12));
  }

  TEST_CASE("triangle prism dihedral matches the closed form") {
    const ClothMesh m3 = build_cylinder(0.05, 0.1, 3, 2, 0.1);
    bool seen = false;
    for (int h = 0; h < m3.nh(); ++h) {
      const Hinge& hg = m3.hinges[h];
      if ((m3.X[hg.v0] - m3.X[hg.v1]).head<2>().norm() < 1e-12) {
        CHECK(hinge_dihedral(m3, m3.hinges[h]) == doctest::Approx(1.0471975511965979).epsilon(1e-9));
        seen = true;
      }
    }
    CHECK(seen);
    const ClothMesh m48 = build_cylinder(0.05, 0.1, 48, 2, 0.1);
    for (int h = 0; h < m48.nh(); ++h) {
      const Hinge& hg = m48.hinges[h];
      if ((m48.X[hg.v0] - m48.X[hg.v1]).head<2>().norm() < 1e-12) {
        CHECK(hinge_dihedral(m48, m48.hinges[h]) ==
              doctest::Approx(3.0106929596902186).epsilon(1e-9));
        break;
      }
    }
  }

  TEST_CASE("dihedral angle value, range and fold symmetry") {
    const Vec3 x0(0, 0, 0), x1(1, 0, 0), oa(0.5, -1, 0);
    CHECK(dihedral_angle(x0, x1, oa, Vec3(0.5, 1, 0)) == doctest::Approx(M_PI).epsilon(1e-12));
    for (double a : {0.1, 0.5, 1.2, 2.5}) {
      const Vec3 up(0.5, std::cos(a), std::sin(a));
      const Vec3 dn(0.5, std::cos(a), -std::sin(a));
      const double tu = dihedral_angle(x0, x1, oa, up);
      const double td = dihedral_angle(x0, x1, oa, dn);
      CHECK(tu > 0);
      CHECK(tu < 2 * M_PI);
      // folding to either side gives complementary angles around flat
      CHECK(tu + td == doctest::Approx(2 * M_PI).epsilon(1e-12));
      CHECK(std::abs(tu - M_PI) == doctest::Approx(a).epsilon(1e-12));
    }
  }

  TEST_CASE("dihedral gradient matches finite differences and sums to zero") {
    unsigned state = 12345;
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Vec3 p[4] = {Vec3(0, 0, 0) + 0.3 * rand_vec(state), Vec3(1, 0, 0) + 0.3 * rand_vec(state),
                   Vec3(0.5, -1, 0) + 0.3 * rand_vec(state),
                   Vec3(0.5, 1, 0) + 0.3 * rand_vec(state)};
      const DihedralGrad dg = dihedral_with_grad(p[0], p[1], p[2], p[3]);
      if (dg.degenerate) continue;
      Vec3 sum = Vec3::Zero();
      for (int v = 0; v < 4; ++v) sum += dg.g[v];
      CHECK(sum.norm() < 1e-10);
      const double delta = 1e-6;
      for (int v = 0; v < 4; ++v)
        for (int c = 0; c < 3; ++c) {
          Vec3 q[4] = {p[0], p[1], p[2], p[3]};
          q[v][c] += delta;
          const double tp = dihedral_angle(q[0], q[1], q[2], q[3]);
          q[v][c] -= 2 * delta;
          const double tm = dihedral_angle(q[0], q[1], q[2], q[3]);
          const double fd = (tp - tm) / (2 * delta);
          CHECK(dg.g[v][c] == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
        }
      ++checked;
    }
    CHECK(checked > 150);
  }

  TEST_CASE("degenerate faces and non-manifold edges are rejected") {
    ClothMesh m;
    m.X = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)};
    m.UV = {Vec2(0, 0), Vec2(1, 0), Vec2(0, 1), Vec2(1, 1)};
    m.F = {{0, 1, 2}, {1, 3, 2}};
    CHECK_NOTHROW(finalize_rest_state(m, 0.1));

    ClothMesh bad = m;
    bad.X.push_back(Vec3(0.5, 0.5, 1));
    bad.UV.push_back(Vec2(0.5, 0.5));
    bad.F.push_back({1, 2, 4});  // third face over the shared edge
    CHECK_THROWS_AS(finalize_rest_state(bad, 0.1), std::invalid_argument);

    ClothMesh zero = m;
    zero.X[3] = zero.X[1];  // collapses face 1
    CHECK_THROWS_AS(finalize_rest_state(zero, 0.1), std::invalid_argument);
  }

  TEST_CASE("degenerate dihedral keeps flat angle and zero gradient") {
    const DihedralGrad dg =
        dihedral_with_grad(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, 0, 0), Vec3(0.5, 1, 0));
    CHECK(dg.degenerate);
    CHECK(dg.theta == doctest::Approx(M_PI));
    for (int v = 0; v < 4; ++v) CHECK(dg.g[v].norm() == 0);
  }
}
