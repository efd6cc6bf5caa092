#include "crease/contact.hpp"

#include <algorithm>
#include <cmath>

namespace crease {

Vec3 Obstacle::offset_at(double t) const {
  if (track.empty()) return Vec3::Zero();
  if (t <= track.front().t) return track.front().pos;
  if (t >= track.back().t) return track.back().pos;
  for (size_t k = 0; k + 1 < track.size(); ++k) {
    const Keyframe &a = track[k], &b = track[k + 1];
    if (t <= b.t) {
      const double s = (t - a.t) / (b.t - a.t);
      return a.pos + s * (b.pos - a.pos);
    }
  }
  return track.back().pos;
}

double Obstacle::signed_distance(const Vec3& q, double t, Vec3& normal) const {
  const Vec3 c = p + offset_at(t);
  switch (shape) {
    case Shape::plane:
      normal = n;
      return n.dot(q - c);
    case Shape::sphere: {
      const Vec3 d = q - c;
      const double r = d.norm();
      normal = r > 1e-12 ? Vec3(d / r) : Vec3::UnitZ();
      return r - radius;
    }
    case Shape::tube: {
      // solid fills r >= radius around axis z; half.z > 0 limits the wall to
      // z in [c.z, c.z + half.z], leaving free space above the rim and below
      Vec3 d = q - c;
      const double dz = d.z();
      d.z() = 0;
      const double r = d.norm();
      const Vec3 inward = r > 1e-12 ? Vec3(-d / r) : Vec3::UnitX();
      if (half.z() > 0 && (dz < 0 || dz > half.z())) {
        const double dv = dz < 0 ? -dz : dz - half.z();
        const double dr = std::max(radius - r, 0.0);
        const double dist = std::hypot(dr, dv);
        const Vec3 axial = dz < 0 ? Vec3(-Vec3::UnitZ()) : Vec3(Vec3::UnitZ());
        normal = (dr * inward + dv * axial) / dist;
        return dist;
      }
      normal = inward;
      return radius - r;
    }
    case Shape::box: {
      const Vec3 d = q - c;
      const Vec3 a = d.cwiseAbs() - half;
      if ((a.array() <= 0).all()) {
        // inside: push out through the nearest face
        int ax = 0;
        a.maxCoeff(&ax);
        normal = Vec3::Zero();
        normal[ax] = d[ax] >= 0 ? 1.0 : -1.0;
        return a[ax];
      }
      const Vec3 outside = a.cwiseMax(0.0);
      const double dist = outside.norm();
      Vec3 g = Vec3::Zero();
      for (int k = 0; k < 3; ++k)
        if (a[k] > 0) g[k] = (d[k] >= 0 ? 1.0 : -1.0) * outside[k];
      normal = dist > 1e-12 ? Vec3(g / dist) : Vec3::UnitZ();
      return dist;
    }
  }
  normal = Vec3::UnitZ();
  return 0;
}

int add_contact_forces(const ClothMesh& m, const std::vector<Obstacle>& obstacles, double t,
                       double h, const ContactParams& cp, std::vector<Vec3>& f, BlockMatrix& J) {
  int active = 0;
  for (int i = 0; i < m.nv(); ++i) {
    for (const Obstacle& ob : obstacles) {
      Vec3 nrm;
      const double sd = ob.signed_distance(m.X[i], t, nrm);
      const double depth = cp.thickness - sd;
      if (depth <= 0) continue;
      ++active;
      const double N = cp.kc * depth;
      const Vec3 vt = m.V[i] - m.V[i].dot(nrm) * nrm;
      const Vec3 ft_applied = f[i] - f[i].dot(nrm) * nrm;
      f[i] += N * nrm;
      J.add_diag(i, -cp.kc * nrm * nrm.transpose());
      const double vt_len = vt.norm();
      if (vt_len < cp.v_stick) {
        const double cap = std::min(ft_applied.norm(), cp.mu * N);
        if (cap > 0 && ft_applied.norm() > 1e-16) f[i] -= cap * ft_applied.normalized();
      } else {
        // never stronger than the force stopping the vertex this step
        const double cap = std::min(cp.mu * N, m.mass[i] * vt_len / h);
        f[i] -= cap * vt / vt_len;
      }
    }
  }
  return active;
}

}  // namespace crease
