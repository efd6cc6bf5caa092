#include "crease/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace crease {

std::shared_ptr<const BlockPattern> BlockPattern::build(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : pairs) {
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto sp = std::make_shared<BlockPattern>();
  BlockPattern& p = *sp;
  p.n = n;
  p.row_ptr.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    auto& row = adj[i];
    row.push_back(i);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    p.row_ptr[i + 1] = p.row_ptr[i] + static_cast<int>(row.size());
  }
  p.col_idx.reserve(p.row_ptr[n]);
  p.diag_idx.resize(n);
  for (int i = 0; i < n; ++i)
    for (int c : adj[i]) {
      if (c == i) p.diag_idx[i] = static_cast<int>(p.col_idx.size());
      p.col_idx.push_back(c);
    }
  return sp;
}

int BlockPattern::find(int i, int j) const {
  const int lo = row_ptr[i], hi = row_ptr[i + 1];
  auto it = std::lower_bound(col_idx.begin() + lo, col_idx.begin() + hi, j);
  if (it == col_idx.begin() + hi || *it != j) return -1;
  return static_cast<int>(it - col_idx.begin());
}

std::shared_ptr<const BlockPattern> pattern_from_mesh(const ClothMesh& m) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m.nf() * 3 + m.nh());
  for (const auto& f : m.F) {
    pairs.emplace_back(f[0], f[1]);
    pairs.emplace_back(f[1], f[2]);
    pairs.emplace_back(f[2], f[0]);
  }
  for (const auto& h : m.hinges) pairs.emplace_back(h.oa, h.ob);
  return BlockPattern::build(m.nv(), pairs);
}

void BlockMatrix::setZero() {
  for (auto& b : val) b.setZero();
}

void BlockMatrix::add(int i, int j, const Mat3& b) {
  const int s = pat->find(i, j);
  val[s] += b;
}

void BlockMatrix::multiply(const std::vector<Vec3>& x, std::vector<Vec3>& y) const {
  const int n = pat->n;
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    Vec3 acc = Vec3::Zero();
    for (int s = pat->row_ptr[i]; s < pat->row_ptr[i + 1]; ++s) acc += val[s] * x[pat->col_idx[s]];
    y[i] = acc;
  }
}

void BlockMatrix::apply_pin_filter(const std::vector<std::uint8_t>& pinned) {
  const int n = pat->n;
  for (int i = 0; i < n; ++i)
    for (int s = pat->row_ptr[i]; s < pat->row_ptr[i + 1]; ++s) {
      const int j = pat->col_idx[s];
      if (!pinned[i] && !pinned[j]) continue;
      val[s] = (i == j) ? Mat3(Mat3::Identity()) : Mat3(Mat3::Zero());
    }
}

namespace {

double dot(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].dot(b[i]);
  return s;
}

}  // namespace

CgResult cg_solve(const BlockMatrix& A, const std::vector<Vec3>& b, std::vector<Vec3>& x,
                  double tol, int max_iters) {
  const int n = A.pat->n;
  x.assign(n, Vec3::Zero());
  std::vector<Mat3> pre(n);
  for (int i = 0; i < n; ++i) {
    const Mat3& d = A.val[A.pat->diag_idx[i]];
    pre[i] = (d.determinant() != 0) ? Mat3(d.inverse()) : Mat3::Identity();
  }
  std::vector<Vec3> r = b, z(n), p(n), Ap(n);
  const double bnorm = std::sqrt(dot(b, b));
  CgResult res;
  if (bnorm == 0) {
    res.converged = true;
    return res;
  }
  for (int i = 0; i < n; ++i) z[i] = pre[i] * r[i];
  p = z;
  double rz = dot(r, z);
  for (int it = 0; it < max_iters; ++it) {
    A.multiply(p, Ap);
    const double pAp = dot(p, Ap);
    if (pAp <= 0) break;  // matrix lost positive definiteness
    const double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    res.iters = it + 1;
    res.rel_residual = std::sqrt(dot(r, r)) / bnorm;
    if (res.rel_residual < tol) {
      res.converged = true;
      return res;
    }
    for (int i = 0; i < n; ++i) z[i] = pre[i] * r[i];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  res.rel_residual = std::sqrt(dot(r, r)) / bnorm;
  res.converged = res.rel_residual < tol;
  return res;
}

}  // namespace crease
