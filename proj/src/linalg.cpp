#include "extrikit/linalg.hpp"

namespace xk {

Q fnormalize(const Field& f, const Q& x) {
  if (f.p == 0) {
    Q y = x;
    y.canonicalize();
    return y;
  }
  mpz_class p(static_cast<long>(f.p));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw std::runtime_error("denominator divisible by p");
  if (den != 1) {
    mpz_class inv;
    check(mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) != 0, "no inverse mod p");
    num = (num * inv) % p;
  }
  return Q(num);
}

Q finv(const Field& f, const Q& x) {
  Q y = fnormalize(f, x);
  check(y != 0, "division by zero");
  if (f.p == 0) return Q(1) / y;
  mpz_class p(static_cast<long>(f.p)), inv;
  check(mpz_invert(inv.get_mpz_t(), y.get_num().get_mpz_t(), p.get_mpz_t()) != 0, "no inverse mod p");
  return Q(inv);
}

Mat Mat::id(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const Q& x : a)
    if (x != 0) return false;
  return true;
}

static void same_field(const Mat& A, const Mat& B) {
  check(A.f == B.f, "mixed field descriptors");
}

Mat mat_mul(const Mat& A, const Mat& B) {
  same_field(A, B);
  check(A.c == B.r, "mat_mul shape mismatch");
  Mat C(A.f, A.r, B.c);
  for (int i = 0; i < A.r; ++i)
    for (int k = 0; k < A.c; ++k) {
      const Q& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.c; ++j)
        if (B.at(k, j) != 0) C.at(i, j) += aik * B.at(k, j);
    }
  for (Q& x : C.a) x = fnormalize(C.f, x);
  return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
  same_field(A, B);
  check(A.r == B.r && A.c == B.c, "mat_add shape mismatch");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = fnormalize(C.f, C.a[i] + B.a[i]);
  return C;
}

Mat mat_sub(const Mat& A, const Mat& B) { return mat_add(A, mat_neg(B)); }

Mat mat_scale(const Q& s, const Mat& A) {
  Mat C = A;
  for (Q& x : C.a) x = fnormalize(C.f, s * x);
  return C;
}

Mat mat_neg(const Mat& A) { return mat_scale(Q(-1), A); }

Mat transpose(const Mat& A) {
  Mat C(A.f, A.c, A.r);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

Mat hcat(const Mat& A, const Mat& B) {
  same_field(A, B);
  check(A.r == B.r, "hcat shape mismatch");
  Mat C(A.f, A.r, A.c + B.c);
  for (int i = 0; i < A.r; ++i) {
    for (int j = 0; j < A.c; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.c; ++j) C.at(i, A.c + j) = B.at(i, j);
  }
  return C;
}

Mat vcat(const Mat& A, const Mat& B) {
  same_field(A, B);
  check(A.c == B.c, "vcat shape mismatch");
  Mat C(A.f, A.r + B.r, A.c);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.r; ++i)
    for (int j = 0; j < B.c; ++j) C.at(A.r + i, j) = B.at(i, j);
  return C;
}

Mat kronecker_tensor(const Mat& A, const Mat& B) {
  same_field(A, B);
  Mat C(A.f, A.r * B.r, A.c * B.c);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) {
      if (A.at(i, j) == 0) continue;
      for (int k = 0; k < B.r; ++k)
        for (int l = 0; l < B.c; ++l)
          C.at(i * B.r + k, j * B.c + l) = fnormalize(C.f, A.at(i, j) * B.at(k, l));
    }
  return C;
}

Mat diag_cat(const std::vector<Mat>& blocks, Field f) {
  int r = 0, c = 0;
  for (const Mat& b : blocks) { r += b.r; c += b.c; }
  Mat C(f, r, c);
  int ro = 0, co = 0;
  for (const Mat& b : blocks) {
    check(b.f == f, "mixed field descriptors");
    for (int i = 0; i < b.r; ++i)
      for (int j = 0; j < b.c; ++j) C.at(ro + i, co + j) = b.at(i, j);
    ro += b.r;
    co += b.c;
  }
  return C;
}

/* Row echelon form in place; returns pivot columns. Exact, deterministic. */
struct Echelon {
  Mat R;
  std::vector<int> pivots;
};

static Echelon echelon(Mat m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int pr = -1;
    for (int i = row; i < m.r; ++i)
      if (m.at(i, col) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.c; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Q inv = finv(m.f, m.at(row, col));
    for (int j = col; j < m.c; ++j) m.at(row, j) = fnormalize(m.f, m.at(row, j) * inv);
    for (int i = 0; i < m.r; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Q factor = m.at(i, col);
      for (int j = col; j < m.c; ++j)
        m.at(i, j) = fnormalize(m.f, m.at(i, j) - factor * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const Mat& m) { return (int)echelon(m).pivots.size(); }

Subspace kernel_basis(const Mat& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.c, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Subspace s;
  s.ambient = m.c;
  s.basis = Mat(m.f, m.c, m.c - (int)e.pivots.size());
  int k = 0;
  for (int col = 0; col < m.c; ++col) {
    if (is_pivot[col]) continue;
    s.basis.at(col, k) = 1;
    for (size_t pi = 0; pi < e.pivots.size(); ++pi)
      s.basis.at(e.pivots[pi], k) = fnormalize(m.f, -e.R.at((int)pi, col));
    ++k;
  }
  return s;
}

Subspace image_basis(const Mat& m) {
  Echelon e = echelon(m);
  Subspace s;
  s.ambient = m.r;
  s.basis = Mat(m.f, m.r, (int)e.pivots.size());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (int i = 0; i < m.r; ++i) s.basis.at(i, (int)k) = m.at(i, e.pivots[k]);
  return s;
}

Cokernel cokernel(const Mat& m) {
  /* Choose a complement of Im(m) among coordinate vectors, then invert the
   * combined basis [Im | complement]; the projection is the complement block
   * of the inverse. */
  Subspace im = image_basis(m);
  int t = m.r, r = im.dim();
  Mat aug = hcat(im.basis, Mat::id(m.f, t));
  Echelon e = echelon(aug);
  std::vector<int> comp;
  for (int p : e.pivots)
    if (p >= r) comp.push_back(p - r);
  check((int)comp.size() == t - r, "cokernel: complement size");
  Mat basis(m.f, t, t);  // [Im | e_comp]
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < t; ++i) basis.at(i, j) = im.basis.at(i, j);
  for (int k = 0; k < t - r; ++k) basis.at(comp[k], r + k) = 1;
  /* Invert basis. */
  Echelon inv = echelon(hcat(basis, Mat::id(m.f, t)));
  check((int)inv.pivots.size() >= t, "cokernel: basis not invertible");
  Cokernel ck;
  ck.quotient_dim = t - r;
  ck.projection = Mat(m.f, t - r, t);
  for (int i = 0; i < t - r; ++i)
    for (int j = 0; j < t; ++j) ck.projection.at(i, j) = inv.R.at(r + i, t + j);
  ck.section = Mat(m.f, t, t - r);
  for (int k = 0; k < t - r; ++k) ck.section.at(comp[k], k) = 1;
  return ck;
}

std::optional<Solution> solve(const Mat& m, const Mat& b) {
  check(m.f == b.f, "mixed field descriptors");
  check(m.r == b.r, "solve shape mismatch");
  Echelon e = echelon(hcat(m, b));
  for (int p : e.pivots)
    if (p >= m.c) return std::nullopt;  // inconsistent column
  Solution s;
  s.particular = Mat(m.f, m.c, b.c);
  for (size_t pi = 0; pi < e.pivots.size(); ++pi)
    for (int j = 0; j < b.c; ++j) s.particular.at(e.pivots[pi], j) = e.R.at((int)pi, m.c + j);
  s.kernel = kernel_basis(m);
  return s;
}

Mat coords_in(const Mat& U, const Mat& v) {
  auto s = solve(U, v);
  check(s.has_value(), "coords_in: vector not in span");
  return s->particular;
}

bool subspace_contains(const Subspace& U, const Mat& vectors) {
  check(U.ambient == vectors.r, "subspace_contains: ambient mismatch");
  return solve(U.basis, vectors).has_value();
}

bool subspace_eq(const Subspace& U, const Subspace& V) {
  if (U.ambient != V.ambient) return false;
  return subspace_contains(U, V.basis) && subspace_contains(V, U.basis);
}

Subspace preimage_of_subspace(const Mat& m, const Subspace& W) {
  check(W.ambient == m.r, "preimage: ambient mismatch");
  Cokernel ck = cokernel(W.basis);
  return kernel_basis(mat_mul(ck.projection, m));
}

Subspace intersect_subspaces(const Subspace& U, const Subspace& V) {
  check(U.ambient == V.ambient, "intersect: ambient mismatch");
  if (U.dim() == 0 || V.dim() == 0) {
    Subspace s;
    s.ambient = U.ambient;
    s.basis = Mat(U.basis.f, U.ambient, 0);
    return s;
  }
  Subspace k = kernel_basis(hcat(U.basis, mat_neg(V.basis)));
  Mat top(U.basis.f, U.dim(), k.dim());
  for (int i = 0; i < U.dim(); ++i)
    for (int j = 0; j < k.dim(); ++j) top.at(i, j) = k.basis.at(i, j);
  Subspace s = image_basis(mat_mul(U.basis, top));
  return s;
}

Subspace span_of(const std::vector<Mat>& gens, int ambient, Field f) {
  Mat all(f, ambient, 0);
  for (const Mat& g : gens) {
    check(g.r == ambient, "span_of: ambient mismatch");
    all = hcat(all, g);
  }
  return image_basis(all);
}

}  // namespace xk
