#include "crease/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "crease/elastic.hpp"

namespace crease {

Model model_from_string(const std::string& s) {
  if (s == "elastic") return Model::elastic;
  if (s == "anchor") return Model::anchor;
  if (s == "dahl") return Model::dahl;
  if (s == "hardening_only") return Model::hardening_only;
  throw std::invalid_argument("unknown model '" + s + "'; use elastic|anchor|dahl|hardening_only");
}

std::string model_to_string(Model m) {
  switch (m) {
    case Model::elastic: return "elastic";
    case Model::anchor: return "anchor";
    case Model::dahl: return "dahl";
    case Model::hardening_only: return "hardening_only";
  }
  return "anchor";
}

Sim::Sim(ClothMesh mesh_in, Material mat_in, SolverConfig cfg_in, Model model_in, ModelFlags flags_in)
    : mesh(std::move(mesh_in)),
      mat(std::move(mat_in)),
      cfg(cfg_in),
      model(model_in),
      flags(flags_in),
      dahl_params(dahl_defaults(mat)),
      pattern_(pattern_from_mesh(mesh)),
      J_(pattern_),
      A_(pattern_) {
  validate_material(mat);
  if (!(cfg.h > 0)) throw std::invalid_argument("step size must be positive");
  if (!(cfg.cg_tol > 0 && cfg.cg_tol < 1)) throw std::invalid_argument("cg_tol must be in (0,1)");
  if (!(cfg.time_scale >= 1)) throw std::invalid_argument("time_scale must be >= 1");
  bend_fric.assign(mesh.nh(), {});
  bend_plas.assign(mesh.nh(), {});
  bend_dahl.assign(mesh.nh(), {});
  const TensileParams tp = mat.tensile_effective();
  ten_fric.assign(mesh.nf(), {});
  ten_plas.assign(mesh.nf(), {});
  for (auto& s : bend_plas) s.eps_y = mat.epsY0;
  for (auto& a : ten_plas)
    for (auto& s : a) s.eps_y = tp.epsY0t;
  f_.resize(mesh.nv());
  b_.resize(mesh.nv());
  dv_.resize(mesh.nv());
  jv_.resize(mesh.nv());
  theta_.resize(mesh.nh());
  for (int h = 0; h < mesh.nh(); ++h) theta_[h] = hinge_dihedral(mesh, mesh.hinges[h]);
}

PlasticParams Sim::bend_plastic_params() const {
  return {mat.Kb(), mat.Kh0, mat.g, mat.tauP, mat.epsY0};
}

FrictionParams Sim::bend_friction_params() const {
  return {mat.eps0, mat.epsInf, mat.tauF};
}

double Sim::hinge_deviation(int h) const {
  // a hinge squeezed past layer-parallel crosses the 0/2pi branch of the
  // dihedral; stepping theta_ by the shortest signed arc keeps the deviation
  // continuous there instead of flipping sign by 2pi
  const double raw = hinge_dihedral(mesh, mesh.hinges[h]);
  theta_[h] += std::remainder(raw - theta_[h], 2 * M_PI);
  return theta_[h] - mesh.hinge_rest[h].rest_angle;
}

double Sim::hinge_elastic_deviation(int h) const {
  double e = hinge_deviation(h);
  const bool plastic =
      (model == Model::anchor && flags.bend_plastic) || model == Model::hardening_only;
  if (plastic) {
    e -= bend_plas[h].eps_p;
    const double y = bend_plas[h].eps_y;
    if (std::abs(e) > y) e = (e > 0 ? y : -y);
  }
  return e;
}

long Sim::update_states() {
  const double h_eff = cfg.h * cfg.time_scale;
  long guard = 0;
  const PlasticParams pp = bend_plastic_params();
  const FrictionParams fp = bend_friction_params();
  for (int h = 0; h < mesh.nh(); ++h) {
    const double dev = hinge_deviation(h);  // also advances the branch tracking
    if (model == Model::elastic) continue;
    if (model == Model::anchor) {
      double e = dev;
      if (flags.bend_plastic) e = plastic_step(bend_plas[h], dev, h_eff, pp);
      if (flags.bend_friction)
        guard += friction_update(bend_fric[h], e, h_eff, fp, cfg.guard_factor) ? 1 : 0;
    } else if (model == Model::dahl) {
      dahl_update(bend_dahl[h], dev, dahl_params);
    } else {  // hardening_only
      plastic_step_fixed_hardening(bend_plas[h], dev, pp);
    }
  }
  if (model == Model::anchor && (flags.tensile_friction || flags.tensile_plastic)) {
    const TensileParams tp = mat.tensile_effective();
    const double ke[3] = {mat.K11, mat.K22, mat.K33};
    const double kf[3] = {tp.K11f, tp.K22f, tp.K33f};
    const FrictionParams ftp{tp.eps0t, tp.epsInft, mat.tauF};
    for (int f = 0; f < mesh.nf(); ++f) {
      const auto& tri = mesh.F[f];
      const MembraneStrain ms =
          membrane_strain(mesh.X[tri[0]], mesh.X[tri[1]], mesh.X[tri[2]], mesh.face_rest[f]);
      for (int k = 0; k < 3; ++k) {
        double e = ms.eps[k];
        if (flags.tensile_plastic) {
          const PlasticParams ptp{ke[k], mat.Kh0, mat.g, mat.tauP, tp.epsY0t};
          e = plastic_step(ten_plas[f][k], ms.eps[k], h_eff, ptp);
        }
        if (flags.tensile_friction && kf[k] > 0)
          guard += friction_update(ten_fric[f][k], e, h_eff, ftp, cfg.guard_factor) ? 1 : 0;
      }
    }
  }
  guard_trips += guard;
  return guard;
}

int Sim::assemble(std::vector<Vec3>& f, BlockMatrix& J) const {
  const int nv = mesh.nv();
  f.assign(nv, Vec3::Zero());
  J.setZero();
  for (int i = 0; i < nv; ++i) f[i] = mesh.mass[i] * cfg.gravity;
  for (const Handle& hd : handles) {
    f[hd.v] += hd.k * (hd.target - mesh.X[hd.v]);
    J.add_diag(hd.v, -hd.k * Mat3::Identity());
  }

  const double kb = mat.Kb();
  const double kfr = mat.Kfriction();
  for (int h = 0; h < mesh.nh(); ++h) {
    const Hinge& hg = mesh.hinges[h];
    const HingeRest& hr = mesh.hinge_rest[h];
    const BendStrain bs =
        bending_strain(mesh.X[hg.v0], mesh.X[hg.v1], mesh.X[hg.oa], mesh.X[hg.ob], hr);
    if (bs.degenerate) continue;
    const double scale = hr.scale();
    const double e_angle = hinge_elastic_deviation(h);
    double sigma = kb * scale * e_angle;  // strain-space stress
    double stiff = kb;
    if (model == Model::anchor && flags.bend_friction) {
      sigma += kfr * scale * (e_angle - bend_fric[h].anchor);
      stiff += kfr;
    } else if (model == Model::dahl) {
      sigma += scale * bend_dahl[h].sigma;
      stiff += bend_dahl[h].slope;
    }
    const ElementForce<4> el = hinge_element(hr.area, sigma, stiff, bs.g);
    const int idx[4] = {hg.v0, hg.v1, hg.oa, hg.ob};
    for (int i = 0; i < 4; ++i) {
      f[idx[i]] += el.f[i];
      for (int j = 0; j < 4; ++j) J.add(idx[i], idx[j], el.J[i][j]);
    }
  }

  const TensileParams tp = mat.tensile_effective();
  const bool ten_fric_on = model == Model::anchor && flags.tensile_friction;
  const bool ten_plas_on = model == Model::anchor && flags.tensile_plastic;
  const double kf[3] = {ten_fric_on ? tp.K11f : 0, ten_fric_on ? tp.K22f : 0,
                        ten_fric_on ? tp.K33f : 0};
  for (int fc = 0; fc < mesh.nf(); ++fc) {
    const auto& tri = mesh.F[fc];
    const FaceRest& fr = mesh.face_rest[fc];
    const MembraneStrain ms = membrane_strain(mesh.X[tri[0]], mesh.X[tri[1]], mesh.X[tri[2]], fr);
    double e[3] = {ms.eps[0], ms.eps[1], ms.eps[2]};
    if (ten_plas_on) {
      for (int k = 0; k < 3; ++k) {
        e[k] -= ten_plas[fc][k].eps_p;
        const double y = ten_plas[fc][k].eps_y;
        if (std::abs(e[k]) > y) e[k] = (e[k] > 0 ? y : -y);
      }
    }
    double sigma[3];
    membrane_stress(e, mat.K11, mat.K22, mat.K12, mat.K33, sigma);
    for (int k = 0; k < 3; ++k)
      if (kf[k] > 0) sigma[k] += kf[k] * (e[k] - ten_fric[fc][k].anchor);
    // stiffness matrix for the GN term: membrane C plus per-axis friction
    double C[3][3] = {{mat.K11 + kf[0], mat.K12, 0},
                      {mat.K12, mat.K22 + kf[1], 0},
                      {0, 0, mat.K33 + kf[2]}};
    for (int i = 0; i < 3; ++i) {
      Vec3 fi = Vec3::Zero();
      for (int k = 0; k < 3; ++k) fi -= fr.area * sigma[k] * ms.g[k][i];
      f[tri[i]] += fi;
      for (int j = 0; j < 3; ++j) {
        Mat3 jb = Mat3::Zero();
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            if (C[k][l] != 0) jb -= fr.area * C[k][l] * ms.g[k][i] * ms.g[l][j].transpose();
        J.add(tri[i], tri[j], jb);
      }
    }
  }

  return add_contact_forces(mesh, obstacles, t, cfg.h, cfg.contact, f, J);
}

StepStats Sim::step() {
  StepStats st;
  st.guard_trips = update_states();

  st.contacts = assemble(f_, J_);
  // A = M(1 + h*damping) - h^2 J ; b = h (f + h J v)
  const double h = cfg.h;
  const int nv = mesh.nv();
  J_.multiply(mesh.V, jv_);
  for (size_t s = 0; s < J_.val.size(); ++s) A_.val[s] = -h * h * J_.val[s];
  const double mscale = 1.0 + h * cfg.damping;
  for (int i = 0; i < nv; ++i) {
    A_.add_diag(i, mesh.mass[i] * mscale * Mat3::Identity());
    b_[i] = mesh.pinned[i] ? Vec3::Zero() : Vec3(h * (f_[i] + h * jv_[i]));
  }
  A_.apply_pin_filter(mesh.pinned);

  const CgResult cg = cg_solve(A_, b_, dv_, cfg.cg_tol, cfg.cg_max_iters);
  st.cg_iters = cg.iters;
  st.cg_residual = cg.rel_residual;
  if (!cg.converged)
    throw std::runtime_error("cg did not converge after " + std::to_string(cg.iters) +
                             " iterations, relative residual " + std::to_string(cg.rel_residual));

  for (int i = 0; i < nv; ++i) {
    if (mesh.pinned[i]) {
      mesh.V[i].setZero();
      continue;
    }
    mesh.V[i] += dv_[i];
    mesh.X[i] += h * mesh.V[i];
  }
  for (int i = 0; i < nv; ++i)
    if (!mesh.X[i].allFinite())
      throw std::runtime_error("non-finite position at vertex " + std::to_string(i) +
                               " after step " + std::to_string(step_count));

  t += h;
  clock += h * cfg.time_scale;
  ++step_count;
  return st;
}

EnergyReport Sim::energy() const {
  EnergyReport e{0, 0, 0};
  for (int i = 0; i < mesh.nv(); ++i) {
    e.kinetic += 0.5 * mesh.mass[i] * mesh.V[i].squaredNorm();
    e.gravity -= mesh.mass[i] * cfg.gravity.dot(mesh.X[i]);
  }
  e.elastic = bending_energy(mesh, mat.Kb()) +
              membrane_energy(mesh, mat.K11, mat.K22, mat.K12, mat.K33);
  return e;
}

void Sim::pin(const std::vector<int>& verts, bool zero_velocity) {
  for (int v : verts) {
    mesh.pinned[v] = 1;
    if (zero_velocity) mesh.V[v].setZero();
  }
}

void Sim::unpin(const std::vector<int>& verts) {
  for (int v : verts) mesh.pinned[v] = 0;
}

}  // namespace crease
