#pragma once

#include "crease/mesh.hpp"

namespace crease {

// Bending strain 3(theta - rest)/height and its gradient wrt the four hinge
// vertices (Hinge order).
struct BendStrain {
  double theta;
  double strain;
  Vec3 g[4];
  bool degenerate;
};
BendStrain bending_strain(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob,
                          const HingeRest& rest);

// Green strain components (eps_uu, eps_vv, eps_uv tensor component) of a
// StVK membrane triangle and their gradients wrt {x0, x1, x2}.
struct MembraneStrain {
  double eps[3];
  Vec3 g[3][3];  // g[component][vertex]
};
MembraneStrain membrane_strain(const Vec3& x0, const Vec3& x1, const Vec3& x2,
                               const FaceRest& rest);

// Force and Gauss-Newton Jacobian contribution of one scalar stress acting
// through a strain gradient: f_i = -area * sigma * g_i,
// J_ij = -area * stiffness * g_i g_j^T (strain Hessian dropped, so J is
// symmetric negative semidefinite).
template <int N>
struct ElementForce {
  Vec3 f[N];
  Mat3 J[N][N];
  void setZero() {
    for (int i = 0; i < N; ++i) {
      f[i].setZero();
      for (int j = 0; j < N; ++j) J[i][j].setZero();
    }
  }
};

// sigma: stress for the force; stiffness: d sigma / d strain for the GN term.
ElementForce<4> hinge_element(double area, double sigma, double stiffness, const Vec3 g[4]);
void add_membrane_element(ElementForce<3>& out, double area, double sigma, double stiffness,
                          const Vec3 g[3]);

// Membrane stress from strain: sigma = C eps with
// C = [[K11, K12, 0], [K12, K22, 0], [0, 0, K33]].
void membrane_stress(const double eps[3], double K11, double K22, double K12, double K33,
                     double sigma[3]);

// Energies for diagnostics and finite-difference oracles.  eps_e is the
// elastic strain entering the stress.
inline double bending_energy_density(double area, double Kb_strain_space, double eps_e) {
  return 0.5 * area * Kb_strain_space * eps_e * eps_e;
}
double membrane_energy(const ClothMesh& m, double K11, double K22, double K12, double K33);
double bending_energy(const ClothMesh& m, double Kb);

}  // namespace crease
