#include "crease/elastic.hpp"

namespace crease {

BendStrain bending_strain(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob,
                          const HingeRest& rest) {
  const DihedralGrad d = dihedral_with_grad(x0, x1, oa, ob);
  BendStrain s;
  s.theta = d.theta;
  s.degenerate = d.degenerate;
  const double k = rest.scale();
  s.strain = k * (d.theta - rest.rest_angle);
  for (int i = 0; i < 4; ++i) s.g[i] = k * d.g[i];
  return s;
}

MembraneStrain membrane_strain(const Vec3& x0, const Vec3& x1, const Vec3& x2,
                               const FaceRest& rest) {
  const double a = rest.inv_uv(0, 0), b = rest.inv_uv(0, 1);
  const double c = rest.inv_uv(1, 0), d = rest.inv_uv(1, 1);
  const Vec3 e1 = x1 - x0, e2 = x2 - x0;
  const Vec3 w1 = a * e1 + c * e2;  // deformation gradient columns
  const Vec3 w2 = b * e1 + d * e2;
  MembraneStrain s;
  s.eps[0] = 0.5 * (w1.dot(w1) - 1.0);
  s.eps[1] = 0.5 * (w2.dot(w2) - 1.0);
  s.eps[2] = 0.5 * w1.dot(w2);
  s.g[0][1] = a * w1;
  s.g[0][2] = c * w1;
  s.g[0][0] = -(a + c) * w1;
  s.g[1][1] = b * w2;
  s.g[1][2] = d * w2;
  s.g[1][0] = -(b + d) * w2;
  s.g[2][1] = 0.5 * (a * w2 + b * w1);
  s.g[2][2] = 0.5 * (c * w2 + d * w1);
  s.g[2][0] = -(s.g[2][1] + s.g[2][2]);
  return s;
}

ElementForce<4> hinge_element(double area, double sigma, double stiffness, const Vec3 g[4]) {
  ElementForce<4> e;
  const double fs = -area * sigma, js = -area * stiffness;
  for (int i = 0; i < 4; ++i) {
    e.f[i] = fs * g[i];
    for (int j = 0; j < 4; ++j) e.J[i][j] = js * g[i] * g[j].transpose();
  }
  return e;
}

void add_membrane_element(ElementForce<3>& out, double area, double sigma, double stiffness,
                          const Vec3 g[3]) {
  const double fs = -area * sigma, js = -area * stiffness;
  for (int i = 0; i < 3; ++i) {
    out.f[i] += fs * g[i];
    for (int j = 0; j < 3; ++j) out.J[i][j] += js * g[i] * g[j].transpose();
  }
}

void membrane_stress(const double eps[3], double K11, double K22, double K12, double K33,
                     double sigma[3]) {
  sigma[0] = K11 * eps[0] + K12 * eps[1];
  sigma[1] = K12 * eps[0] + K22 * eps[1];
  sigma[2] = K33 * eps[2];
}

double membrane_energy(const ClothMesh& m, double K11, double K22, double K12, double K33) {
  double w = 0;
  for (int f = 0; f < m.nf(); ++f) {
    const auto& t = m.F[f];
    const MembraneStrain s = membrane_strain(m.X[t[0]], m.X[t[1]], m.X[t[2]], m.face_rest[f]);
    w += 0.5 * m.face_rest[f].area *
         (K11 * s.eps[0] * s.eps[0] + K22 * s.eps[1] * s.eps[1] +
          2.0 * K12 * s.eps[0] * s.eps[1] + K33 * s.eps[2] * s.eps[2]);
  }
  return w;
}

double bending_energy(const ClothMesh& m, double Kb) {
  double w = 0;
  for (int h = 0; h < m.nh(); ++h) {
    const Hinge& hg = m.hinges[h];
    const BendStrain s =
        bending_strain(m.X[hg.v0], m.X[hg.v1], m.X[hg.oa], m.X[hg.ob], m.hinge_rest[h]);
    w += bending_energy_density(m.hinge_rest[h].area, Kb, s.strain);
  }
  return w;
}

}  // namespace crease
