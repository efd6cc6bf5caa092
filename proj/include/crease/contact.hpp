#pragma once

#include <string>
#include <vector>

#include "crease/mesh.hpp"
#include "crease/sparse.hpp"

namespace crease {

struct Keyframe {
  double t;
  Vec3 pos;  // translation offset from the rest pose
};

// Analytic solid with an optional keyframed translation.  signed_distance is
// positive in free space; the returned normal points into free space.
struct Obstacle {
  enum class Shape { plane, sphere, box, tube };
  Shape shape = Shape::plane;
  std::string name;
  Vec3 p = Vec3::Zero();    // plane point / center
  Vec3 n = Vec3::UnitZ();   // plane normal (unit)
  double radius = 0;        // sphere and tube
  Vec3 half = Vec3::Zero(); // box half extents; tube wall height in half.z
  std::vector<Keyframe> track;

  Vec3 offset_at(double t) const;  // piecewise-linear, clamped at the ends
  double signed_distance(const Vec3& q, double t, Vec3& normal) const;
};

struct ContactParams {
  double kc = 1e3;        // penalty stiffness per unit depth
  double mu = 0.3;        // Coulomb coefficient
  double thickness = 2e-3;
  double v_stick = 1e-4;  // tangential speed below which contacts stick
};

// Penalty contact with Coulomb friction.  The normal spring contributes a
// Gauss-Newton block -kc n n^T; the tangential force is explicit: sticking
// cancels the already-accumulated tangential force up to mu*N, sliding
// opposes the tangential velocity at mu*N capped by the force that stops the
// vertex within one step of size h (explicit Coulomb would re-accelerate
// light vertices past their own speed and blow up).  Call after all other
// forces so f holds the full non-contact force.  Returns the number of
// active contacts.
int add_contact_forces(const ClothMesh& m, const std::vector<Obstacle>& obstacles, double t,
                       double h, const ContactParams& cp, std::vector<Vec3>& f, BlockMatrix& J);

}  // namespace crease
