#include "crease/mesh.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace crease {

double ClothMesh::total_mass() const {
  double s = 0;
  for (double m : mass) s += m;
  return s;
}

double dihedral_angle(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob) {
  const Vec3 e = x1 - x0;
  const Vec3 na = e.cross(oa - x0);        // face a normal, |na| = 2 * area
  const Vec3 nb = (x0 - x1).cross(ob - x1);
  const double len = e.norm(), la = na.norm(), lb = nb.norm();
  if (len <= 0 || la <= 0 || lb <= 0) return M_PI;
  const Vec3 ua = na / la, ub = nb / lb, ue = e / len;
  // flat configuration has ua == ub, so the signed fold angle is atan2-safe
  return M_PI + std::atan2(ua.cross(ub).dot(ue), ua.dot(ub));
}

DihedralGrad dihedral_with_grad(const Vec3& x0, const Vec3& x1, const Vec3& oa, const Vec3& ob) {
  DihedralGrad out;
  const Vec3 e = x1 - x0;
  const Vec3 na = e.cross(oa - x0);
  const Vec3 nb = (x0 - x1).cross(ob - x1);
  const double len = e.norm();
  const double na2 = na.squaredNorm(), nb2 = nb.squaredNorm();
  if (len <= 1e-12 || na2 <= 1e-24 || nb2 <= 1e-24) {
    out.theta = M_PI;
    out.g[0] = out.g[1] = out.g[2] = out.g[3] = Vec3::Zero();
    out.degenerate = true;
    return out;
  }
  const Vec3 ue = e / len;
  out.theta = M_PI + std::atan2((na.cross(nb)).dot(ue) / (std::sqrt(na2) * std::sqrt(nb2)),
                                na.dot(nb) / (std::sqrt(na2) * std::sqrt(nb2)));
  const Vec3 ga = na / na2, gb = nb / nb2;  // n / |n|^2
  out.g[2] = -len * ga;
  out.g[3] = -len * gb;
  out.g[0] = ((x1 - oa).dot(ue)) * ga + ((x1 - ob).dot(ue)) * gb;
  out.g[1] = ((oa - x0).dot(ue)) * ga + ((ob - x0).dot(ue)) * gb;
  out.degenerate = false;
  return out;
}

namespace {

double face_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

// Rest-frame edge matrix from per-vertex uv coordinates.
Mat2 uv_edge_matrix(const Vec2& u0, const Vec2& u1, const Vec2& u2) {
  Mat2 d;
  d.col(0) = u1 - u0;
  d.col(1) = u2 - u0;
  return d;
}

}  // namespace

void finalize_rest_state(ClothMesh& m, double rho) {
  if (!(rho > 0) || !std::isfinite(rho)) throw std::invalid_argument("density must be positive");
  const int nv = m.nv(), nf = m.nf();
  if (m.UV.size() != m.X.size()) throw std::invalid_argument("uv coordinates missing");

  m.V.assign(nv, Vec3::Zero());
  m.pinned.assign(nv, 0);
  m.mass.assign(nv, 0.0);
  m.face_rest.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const auto& tri = m.F[f];
    for (int k = 0; k < 3; ++k)
      if (tri[k] < 0 || tri[k] >= nv) throw std::invalid_argument("face index out of range");
    const double area = face_area(m.X[tri[0]], m.X[tri[1]], m.X[tri[2]]);
    if (area <= 1e-14)
      throw std::invalid_argument("degenerate rest face " + std::to_string(f));
    const Mat2 duv = uv_edge_matrix(m.UV[tri[0]], m.UV[tri[1]], m.UV[tri[2]]);
    if (std::abs(duv.determinant()) <= 1e-14)
      throw std::invalid_argument("degenerate rest uv frame on face " + std::to_string(f));
    m.face_rest[f].area = area;
    m.face_rest[f].inv_uv = duv.inverse();
    for (int k = 0; k < 3; ++k) m.mass[tri[k]] += rho * area / 3.0;
  }

  // Edge -> incident faces.  std::map keeps hinge order deterministic.
  std::map<std::pair<int, int>, std::array<int, 2>> edges;
  for (int f = 0; f < nf; ++f) {
    const auto& tri = m.F[f];
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b = tri[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto it = edges.find(key);
      if (it == edges.end()) {
        edges[key] = {f, -1};
      } else if (it->second[1] == -1) {
        it->second[1] = f;
      } else {
        throw std::invalid_argument("non-manifold edge");
      }
    }
  }

  m.hinges.clear();
  m.hinge_rest.clear();
  for (const auto& [key, fc] : edges) {
    if (fc[1] == -1) continue;  // boundary edge
    Hinge h;
    h.fa = std::min(fc[0], fc[1]);
    h.fb = std::max(fc[0], fc[1]);
    const auto& ta = m.F[h.fa];
    // orient (v0, v1) along face a's winding
    h.v0 = h.v1 = -1;
    for (int k = 0; k < 3; ++k) {
      int a = ta[k], b = ta[(k + 1) % 3];
      if (std::pair<int, int>(std::min(a, b), std::max(a, b)) == key) {
        h.v0 = a;
        h.v1 = b;
        h.oa = ta[(k + 2) % 3];
        break;
      }
    }
    const auto& tb = m.F[h.fb];
    h.ob = -1;
    for (int k = 0; k < 3; ++k)
      if (tb[k] != h.v0 && tb[k] != h.v1) h.ob = tb[k];
    if (h.v0 < 0 || h.ob < 0) throw std::invalid_argument("broken hinge topology");

    HingeRest r;
    r.edge_len = (m.X[h.v1] - m.X[h.v0]).norm();
    if (r.edge_len <= 1e-14) throw std::invalid_argument("zero-length hinge edge");
    const double aa = m.face_rest[h.fa].area, ab = m.face_rest[h.fb].area;
    r.height = (2.0 * aa / r.edge_len + 2.0 * ab / r.edge_len) / 2.0;
    r.area = r.edge_len * r.height / 3.0;
    r.rest_angle = dihedral_angle(m.X[h.v0], m.X[h.v1], m.X[h.oa], m.X[h.ob]);
    m.hinges.push_back(h);
    m.hinge_rest.push_back(r);
  }
}

ClothMesh build_grid(double width, double height, int nx, int ny, double rho) {
  if (!(width > 0) || !(height > 0) || !std::isfinite(width) || !std::isfinite(height))
    throw std::invalid_argument("grid dimensions must be positive");
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2x2 vertices");
  ClothMesh m;
  m.X.reserve(static_cast<size_t>(nx) * ny);
  m.UV.reserve(m.X.capacity());
  const double dx = width / (nx - 1), dy = height / (ny - 1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      m.X.emplace_back(i * dx, j * dy, 0.0);
      m.UV.emplace_back(i * dx, j * dy);
    }
  auto vid = [nx](int i, int j) { return j * nx + i; };
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      // consistent diagonal (i,j)-(i+1,j+1); ccw seen from +z
      m.F.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      m.F.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  finalize_rest_state(m, rho);
  return m;
}

ClothMesh build_cylinder(double radius, double length, int n_around, int n_along, double rho) {
  if (!(radius > 0) || !(length > 0) || !std::isfinite(radius) || !std::isfinite(length))
    throw std::invalid_argument("cylinder dimensions must be positive");
  if (n_around < 3 || n_along < 2) throw std::invalid_argument("cylinder needs >=3 around, >=2 rings");
  ClothMesh m;
  const double dz = length / (n_along - 1);
  const double dphi = 2.0 * M_PI / n_around;
  for (int j = 0; j < n_along; ++j)
    for (int i = 0; i < n_around; ++i) {
      const double phi = i * dphi;
      m.X.emplace_back(radius * std::cos(phi), radius * std::sin(phi), j * dz);
      // unrolled coordinates; seam faces get corrected uv below
      m.UV.emplace_back(radius * phi, j * dz);
    }
  auto vid = [n_around](int i, int j) { return j * n_around + (i % n_around); };
  // inward normals: apexes of axial hinges then sit on the normal side and the
  // chordal rest dihedral is pi - 2pi/n_around (regular prism interior angle)
  for (int j = 0; j + 1 < n_along; ++j)
    for (int i = 0; i < n_around; ++i) {
      m.F.push_back({vid(i, j), vid(i + 1, j + 1), vid(i + 1, j)});
      m.F.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
    }
  finalize_rest_state(m, rho);
  // The welded seam wraps uv, so rebuild every face rest frame from the
  // chordal 3D embedding: u along the circumferential chord, v axial.  Zero
  // rest strain everywhere by construction, warp = circumference.
  for (int f = 0; f < m.nf(); ++f) {
    const auto& tri = m.F[f];
    const Vec3 p0 = m.X[tri[0]], p1 = m.X[tri[1]], p2 = m.X[tri[2]];
    const Vec3 n = (p1 - p0).cross(p2 - p0).normalized();
    Vec3 u = Vec3::UnitZ().cross(n);
    const double un = u.norm();
    if (un <= 1e-12) throw std::invalid_argument("cylinder face parallel to axis plane");
    u /= un;
    const Vec3 v = n.cross(u);
    Mat2 d;
    d.col(0) = Vec2((p1 - p0).dot(u), (p1 - p0).dot(v));
    d.col(1) = Vec2((p2 - p0).dot(u), (p2 - p0).dot(v));
    m.face_rest[f].inv_uv = d.inverse();
  }
  return m;
}

}  // namespace crease
