#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

namespace crease {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// Hinge vertex order: edge start, edge end, apex of face a, apex of face b.
// Face a is the lower-indexed face and (v0,v1) follows face a's winding, so
// the dihedral sign convention is fixed by the mesh itself.
struct Hinge {
  int v0, v1, oa, ob;
  int fa, fb;
};

struct HingeRest {
  double rest_angle;  // dihedral of the rest embedding, flat = pi
  double edge_len;
  double height;      // average of the two triangle heights over the edge
  double area;        // edge_len * height / 3
  // bending strain = scale * (theta - rest_angle), scale = 3 / height
  double scale() const { return 3.0 / height; }
};

struct FaceRest {
  double area;
  Mat2 inv_uv;  // inverse rest-frame edge matrix, maps deformed edges to F
};

struct ClothMesh {
  std::vector<Vec3> X;  // positions
  std::vector<Vec3> V;  // velocities
  std::vector<std::array<int, 3>> F;
  std::vector<Vec2> UV;  // rest-frame coordinates, warp along u
  std::vector<Hinge> hinges;
  std::vector<HingeRest> hinge_rest;
  std::vector<FaceRest> face_rest;
  std::vector<double> mass;  // lumped: rho * (incident face area) / 3
  std::vector<std::uint8_t> pinned;

  int nv() const { return static_cast<int>(X.size()); }
  int nf() const { return static_cast<int>(F.size()); }
  int nh() const { return static_cast<int>(hinges.size()); }
  double total_mass() const;
};

// Dihedral angle in (0, 2pi), flat = pi.  x0,x1 span the shared edge, oa/ob
// are the face apexes in Hinge order.
double dihedral_angle(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob);

struct DihedralGrad {
  double theta;
  Vec3 g[4];        // d theta / d {x0, x1, oa, ob}
  bool degenerate;  // a face collapsed; gradients zeroed, theta kept at pi
};
DihedralGrad dihedral_with_grad(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob);

inline double hinge_dihedral(const ClothMesh& m, const Hinge& h) {
  return dihedral_angle(m.X[h.v0], m.X[h.v1], m.X[h.oa], m.X[h.ob]);
}

// Rectangle in the xy plane, warp along +x.  nx, ny are vertex counts per
// side; every quad is split along the same diagonal.
ClothMesh build_grid(double width, double height, int nx, int ny, double rho);

// Closed tube around the z axis spanning z in [0, length].  n_around vertices
// per ring, n_along rings; the seam is welded (no duplicate vertices).  Rest
// angles come from the chordal embedding: pi - 2pi/n_around across axial
// edges, pi elsewhere.
ClothMesh build_cylinder(double radius, double length, int n_around, int n_along, double rho);

// Builds hinges, rest data and lumped masses from X/F/UV already present.
// Throws std::invalid_argument on degenerate rest geometry or non-manifold
// edges (more than two incident faces).
void finalize_rest_state(ClothMesh& m, double rho);

}  // namespace crease
