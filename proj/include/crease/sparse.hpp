#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "crease/mesh.hpp"

namespace crease {

// Symmetric 3x3-block CSR pattern over vertex indices, diagonal always
// present.  Built once per topology; values are refilled every step.
struct BlockPattern {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col_idx;   // sorted within each row
  std::vector<int> diag_idx;  // slot of (i, i)

  // pairs: undirected off-diagonal couplings
  static std::shared_ptr<const BlockPattern> build(int n,
                                                   const std::vector<std::pair<int, int>>& pairs);
  int find(int i, int j) const;  // slot index, -1 if absent
};

std::shared_ptr<const BlockPattern> pattern_from_mesh(const ClothMesh& m);

struct BlockMatrix {
  std::shared_ptr<const BlockPattern> pat;
  std::vector<Mat3> val;

  explicit BlockMatrix(std::shared_ptr<const BlockPattern> p)
      : pat(std::move(p)), val(pat->col_idx.size(), Mat3::Zero()) {}
  void setZero();
  void add(int i, int j, const Mat3& b);
  void add_diag(int i, const Mat3& b) { val[pat->diag_idx[i]] += b; }
  void multiply(const std::vector<Vec3>& x, std::vector<Vec3>& y) const;
  // zero rows and columns of the given vertices and put identity on their
  // diagonal, so constrained velocity corrections stay exactly zero
  void apply_pin_filter(const std::vector<std::uint8_t>& pinned);
};

struct CgResult {
  int iters = 0;
  double rel_residual = 0;
  bool converged = false;
};

// Block-Jacobi preconditioned conjugate gradients.  Pinned entries of b are
// zeroed; x starts at zero.  All reductions are serial, so the result is a
// pure function of the inputs.
CgResult cg_solve(const BlockMatrix& A, const std::vector<Vec3>& b, std::vector<Vec3>& x,
                  double tol, int max_iters);

}  // namespace crease
