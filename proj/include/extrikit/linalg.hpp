#pragma once
/* Exact dense linear algebra over Q (big rationals) or F_p.
 * Everything upstream reduces to kernels/cokernels/solves computed here. */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xk {

using Q = mpq_class;

/* Field descriptor: p == 0 means Q, otherwise the prime field F_p.
 * F_p values are kept canonical: integer numerator in [0,p), denominator 1. */
struct Field {
  long long p = 0;
  bool operator==(const Field&) const = default;
};

Q fnormalize(const Field& f, const Q& x);
Q finv(const Field& f, const Q& x);  // throws on zero

struct Mat {
  int r = 0, c = 0;
  Field f;
  std::vector<Q> a;  // row-major

  Mat() = default;
  Mat(Field fld, int rows, int cols) : r(rows), c(cols), f(fld), a((size_t)rows * cols, Q(0)) {}

  Q& at(int i, int j) { return a[(size_t)i * c + j]; }
  const Q& at(int i, int j) const { return a[(size_t)i * c + j]; }
  void set(int i, int j, const Q& v) { a[(size_t)i * c + j] = fnormalize(f, v); }

  static Mat id(Field f, int n);
  bool is_zero() const;
  bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_scale(const Q& s, const Mat& A);
Mat mat_neg(const Mat& A);
Mat transpose(const Mat& A);
Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat kronecker_tensor(const Mat& A, const Mat& B);
/* Block-diagonal stack. */
Mat diag_cat(const std::vector<Mat>& blocks, Field f);

struct Subspace {
  int ambient = 0;
  Mat basis;  // columns, linearly independent
  int dim() const { return basis.c; }
};

int rank(const Mat& m);
Subspace kernel_basis(const Mat& m);
Subspace image_basis(const Mat& m);

struct Cokernel {
  int quotient_dim = 0;
  Mat projection;  // rows(m) -> quotient_dim, full row rank, kernel = Im(m)
  Mat section;     // right inverse: projection * section = id
};
Cokernel cokernel(const Mat& m);

struct Solution {
  Mat particular;     // one solution of m x = b (column, or matrix for matrix rhs)
  Subspace kernel;    // full solution space offset
};
/* Solve m X = B columnwise; nullopt if any column unsolvable. */
std::optional<Solution> solve(const Mat& m, const Mat& b);

/* Coordinates of the columns of v in the column basis U; throws if not contained. */
Mat coords_in(const Mat& U, const Mat& v);
bool subspace_contains(const Subspace& U, const Mat& vectors);
bool subspace_eq(const Subspace& U, const Subspace& V);
Subspace preimage_of_subspace(const Mat& m, const Subspace& W);
Subspace intersect_subspaces(const Subspace& U, const Subspace& V);
/* Span of the columns of several matrices in a common ambient space. */
Subspace span_of(const std::vector<Mat>& gens, int ambient, Field f);

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

}  // namespace xk
