#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extrikit/linalg.hpp"

using namespace xk;

static Mat mk(Field f, int r, int c, std::vector<long> entries) {
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, Q(entries[(size_t)i * c + j]));
  return m;
}

static const Field QQ{0};
static const Field F5{5};

TEST_CASE("kernel_basis basics") {
  CHECK(kernel_basis(mk(QQ, 2, 2, {1, 0, 0, 0})).dim() == 1);
  auto k = kernel_basis(mk(QQ, 2, 2, {1, 0, 0, 0}));
  CHECK(k.basis.at(0, 0) == 0);
  CHECK(k.basis.at(1, 0) == 1);
  CHECK(kernel_basis(Mat(QQ, 2, 3)).dim() == 3);
  auto k2 = kernel_basis(mk(QQ, 2, 2, {1, 2, 2, 4}));
  CHECK(k2.dim() == 1);
  CHECK(k2.basis.at(0, 0) + 2 * k2.basis.at(1, 0) == 0);  // (-2,1) direction
}

TEST_CASE("cokernel basics") {
  auto c1 = cokernel(mk(QQ, 2, 1, {1, 0}));
  CHECK(c1.quotient_dim == 1);
  auto c2 = cokernel(Mat(QQ, 2, 1));
  CHECK(c2.quotient_dim == 2);
  CHECK(cokernel(mk(QQ, 1, 1, {2})).quotient_dim == 0);
}

TEST_CASE("solve basics") {
  auto s = solve(Mat::id(QQ, 2), mk(QQ, 2, 1, {3, 5}));
  REQUIRE(s.has_value());
  CHECK(s->particular.at(0, 0) == 3);
  CHECK(s->particular.at(1, 0) == 5);
  CHECK(s->kernel.dim() == 0);
  CHECK(!solve(Mat(QQ, 2, 2), mk(QQ, 2, 1, {1, 0})).has_value());
  auto s2 = solve(mk(QQ, 1, 2, {1, 1}), mk(QQ, 1, 1, {2}));
  REQUIRE(s2.has_value());
  CHECK(s2->particular.at(0, 0) == 2);
  CHECK(s2->particular.at(1, 0) == 0);
  CHECK(s2->kernel.dim() == 1);
}

TEST_CASE("rank-nullity and cokernel laws on a grid of matrices") {
  for (Field f : {QQ, F5}) {
    long v = 1;
    for (int r = 1; r <= 4; ++r)
      for (int c = 1; c <= 4; ++c) {
        Mat m(f, r, c);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j) {
            v = (v * 37 + 11) % 101;
            m.set(i, j, Q(v - 50));
          }
        CHECK(kernel_basis(m).dim() + rank(m) == c);
        auto ck = cokernel(m);
        CHECK(mat_mul(ck.projection, m).is_zero());
        CHECK(rank(ck.projection) == ck.quotient_dim);
        CHECK(mat_mul(ck.projection, ck.section) == Mat::id(f, ck.quotient_dim));
        /* solve succeeds iff rhs is in the image span */
        Mat b(f, r, 1);
        for (int i = 0; i < r; ++i) {
          v = (v * 37 + 11) % 101;
          b.set(i, 0, Q(v - 50));
        }
        bool solvable = solve(m, b).has_value();
        CHECK(solvable == subspace_contains(image_basis(m), b));
      }
  }
}

TEST_CASE("preimage and intersection") {
  Mat m = mk(QQ, 2, 2, {1, 0, 0, 0});
  Subspace w{2, mk(QQ, 2, 1, {1, 0})};
  CHECK(preimage_of_subspace(m, w).dim() == 2);  // everything maps into span(e1)
  Subspace u{2, mk(QQ, 2, 1, {1, 0})};
  Subspace vv{2, mk(QQ, 2, 2, {1, 0, 0, 1})};
  CHECK(intersect_subspaces(u, vv).dim() == 1);
  Subspace w2{2, mk(QQ, 2, 1, {0, 1})};
  CHECK(intersect_subspaces(u, w2).dim() == 0);
}

TEST_CASE("kronecker and F_p arithmetic") {
  Mat a = mk(F5, 1, 2, {2, 3});
  Mat b = mk(F5, 2, 1, {4, 1});
  Mat k = kronecker_tensor(a, b);
  CHECK(k.r == 2);
  CHECK(k.c == 2);
  CHECK(k.at(0, 0) == 3);  // 2*4 mod 5
  CHECK(finv(F5, Q(3)) == 2);
  CHECK(fnormalize(F5, Q(1, 3)) == 2);
  CHECK_THROWS(finv(F5, Q(0)));
  CHECK_THROWS(mat_mul(Mat(QQ, 1, 1), Mat(F5, 1, 1)));
}
