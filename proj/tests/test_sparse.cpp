#include <doctest.h>

#include <Eigen/Cholesky>
#include <random>

#include "crease/mesh.hpp"
#include "crease/sparse.hpp"

using namespace crease;

namespace {

// dense mirror for oracle solves
Eigen::MatrixXd to_dense(const BlockMatrix& A) {
  const int n = A.pat->n;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  for (int i = 0; i < n; ++i)
    for (int s = A.pat->row_ptr[i]; s < A.pat->row_ptr[i + 1]; ++s)
      D.block<3, 3>(3 * i, 3 * A.pat->col_idx[s]) = A.val[s];
  return D;
}

}  // namespace

TEST_SUITE("sparse") {
  TEST_CASE("pattern stores sorted rows with guaranteed diagonal") {
    const auto pat = BlockPattern::build(4, {{0, 2}, {2, 1}, {3, 0}});
    CHECK(pat->n == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(pat->find(i, i) == pat->diag_idx[i]);
      for (int s = pat->row_ptr[i] + 1; s < pat->row_ptr[i + 1]; ++s)
        CHECK(pat->col_idx[s - 1] < pat->col_idx[s]);
    }
    // couplings are symmetric
    CHECK(pat->find(0, 2) >= 0);
    CHECK(pat->find(2, 0) >= 0);
    CHECK(pat->find(1, 3) == -1);
  }

  TEST_CASE("identity solves in one iteration") {
    auto pat = BlockPattern::build(5, {});
    BlockMatrix A(pat);
    for (int i = 0; i < 5; ++i) A.add_diag(i, Mat3::Identity());
    std::vector<Vec3> b(5), x;
    for (int i = 0; i < 5; ++i) b[i] = Vec3(i + 1, -i, 0.5 * i);
    const CgResult r = cg_solve(A, b, x, 1e-10, 100);
    CHECK(r.converged);
    CHECK(r.iters <= 1);
    for (int i = 0; i < 5; ++i) CHECK((x[i] - b[i]).norm() < 1e-12);
  }

  TEST_CASE("block diagonal systems solve to machine precision") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1, 1);
    auto pat = BlockPattern::build(8, {});
    BlockMatrix A(pat);
    std::vector<Vec3> xs(8), b(8), x;
    for (int i = 0; i < 8; ++i) {
      Mat3 R;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) R(r, c) = u(rng);
      A.add_diag(i, (R * R.transpose() + 3.0 * Mat3::Identity()).eval());
      xs[i] = Vec3(u(rng), u(rng), u(rng));
    }
    A.multiply(xs, b);
    const CgResult r = cg_solve(A, b, x, 1e-12, 200);
    CHECK(r.converged);
    for (int i = 0; i < 8; ++i) CHECK((x[i] - xs[i]).norm() < 1e-9);
  }

  TEST_CASE("random sparse spd system matches a dense factorization") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    const int n = 30;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k) pairs.push_back({i, (i + 1 + static_cast<int>(rng() % 7)) % n});
    auto pat = BlockPattern::build(n, pairs);
    BlockMatrix A(pat);
    // symmetric off-diagonal blocks, diagonally dominant
    for (int i = 0; i < n; ++i)
      for (int s = pat->row_ptr[i]; s < pat->row_ptr[i + 1]; ++s) {
        const int j = pat->col_idx[s];
        if (j < i) continue;
        if (j == i) continue;
        Mat3 B;
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) B(r, c) = 0.2 * u(rng);
        A.val[s] += B;
        A.val[pat->find(j, i)] += B.transpose();
      }
    for (int i = 0; i < n; ++i) A.add_diag(i, 8.0 * Mat3::Identity());

    std::vector<Vec3> b(n), x;
    for (int i = 0; i < n; ++i) b[i] = Vec3(u(rng), u(rng), u(rng));
    const CgResult r = cg_solve(A, b, x, 1e-12, 500);
    CHECK(r.converged);

    const Eigen::MatrixXd D = to_dense(A);
    CHECK((D - D.transpose()).norm() < 1e-14);
    Eigen::VectorXd rhs(3 * n);
    for (int i = 0; i < n; ++i) rhs.segment<3>(3 * i) = b[i];
    const Eigen::VectorXd xd = D.ldlt().solve(rhs);
    for (int i = 0; i < n; ++i) CHECK((x[i] - xd.segment<3>(3 * i)).norm() < 1e-8);
  }

  TEST_CASE("multiply agrees with the dense mirror") {
    const ClothMesh m = build_grid(0.2, 0.2, 5, 5, 0.1);
    auto pat = pattern_from_mesh(m);
    BlockMatrix A(pat);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& v : A.val)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) v(r, c) = u(rng);
    std::vector<Vec3> x(m.nv()), y;
    for (auto& v : x) v = Vec3(u(rng), u(rng), u(rng));
    A.multiply(x, y);
    const Eigen::MatrixXd D = to_dense(A);
    Eigen::VectorXd xd(3 * m.nv());
    for (int i = 0; i < m.nv(); ++i) xd.segment<3>(3 * i) = x[i];
    const Eigen::VectorXd yd = D * xd;
    for (int i = 0; i < m.nv(); ++i) CHECK((y[i] - yd.segment<3>(3 * i)).norm() < 1e-12);
  }

  TEST_CASE("mesh pattern couples exactly the element stencils") {
    const ClothMesh m = build_grid(0.2, 0.2, 4, 4, 0.1);
    auto pat = pattern_from_mesh(m);
    for (const auto& f : m.F)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(pat->find(f[a], f[b]) >= 0);
    for (const auto& h : m.hinges) {
      const int v[4] = {h.v0, h.v1, h.oa, h.ob};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(pat->find(v[a], v[b]) >= 0);
    }
    // opposite grid corners never interact
    CHECK(pat->find(0, m.nv() - 1) == -1);
  }

  TEST_CASE("pin filter zeroes rows and columns and pins the update") {
    auto pat = BlockPattern::build(3, {{0, 1}, {1, 2}});
    BlockMatrix A(pat);
    for (int i = 0; i < 3; ++i) A.add_diag(i, 4.0 * Mat3::Identity());
    A.add(0, 1, Mat3::Ones());
    A.add(1, 0, Mat3::Ones());
    A.add(1, 2, -Mat3::Ones());
    A.add(2, 1, -Mat3::Ones());
    std::vector<std::uint8_t> pinned = {0, 1, 0};
    A.apply_pin_filter(pinned);
    CHECK(A.val[pat->find(0, 1)].norm() == 0);
    CHECK(A.val[pat->find(1, 0)].norm() == 0);
    CHECK((A.val[pat->diag_idx[1]] - Mat3::Identity()).norm() == 0);
    // solving with a zeroed pinned rhs keeps the pinned vertex unmoved
    std::vector<Vec3> b = {Vec3(1, 0, 0), Vec3::Zero(), Vec3(0, 0, 2)}, x;
    const CgResult r = cg_solve(A, b, x, 1e-12, 100);
    CHECK(r.converged);
    CHECK(x[1].norm() == 0);
  }

  TEST_CASE("iteration cap reports non-convergence") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    const int n = 20;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    auto pat = BlockPattern::build(n, pairs);
    BlockMatrix A(pat);
    for (int i = 0; i + 1 < n; ++i) {
      const Mat3 B = -Mat3::Identity() * 0.49;
      A.add(i, i + 1, B);
      A.add(i + 1, i, B);
    }
    for (int i = 0; i < n; ++i) A.add_diag(i, Mat3::Identity());
    std::vector<Vec3> b(n), x;
    for (auto& v : b) v = Vec3(u(rng), u(rng), u(rng));
    const CgResult r = cg_solve(A, b, x, 1e-14, 2);
    CHECK_FALSE(r.converged);
    CHECK(r.iters == 2);
    CHECK(r.rel_residual > 1e-14);
  }
}
