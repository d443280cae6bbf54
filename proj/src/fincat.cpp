#include "extrikit/fincat.hpp"

#include <algorithm>

namespace xk {

int Category::idx(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  check(it != names.end(), "unknown indecomposable: " + name);
  return (int)(it - names.begin());
}

void Category::init_tables() {
  int N = n();
  hdim.assign(N, std::vector<int>(N, 0));
  bname.assign(N, std::vector<std::vector<std::string>>(N));
  comp.assign(N, std::vector<std::vector<Mat>>(N, std::vector<Mat>(N)));
  idc.assign(N, Mat());
}

Mat Category::comp_col(int i, int j, int k, int b1, int b2) const {
  const Mat& t = comp[i][j][k];
  Mat col(f, hdim[i][k], 1);
  int c = b1 * hdim[j][k] + b2;
  for (int r = 0; r < t.r; ++r) col.at(r, 0) = t.at(r, c);
  return col;
}

Obj obj_indec(const Category& C, int i) {
  Obj o;
  o.m.assign(C.n(), 0);
  o.m[i] = 1;
  return o;
}

Obj obj_zero(const Category& C) {
  Obj o;
  o.m.assign(C.n(), 0);
  return o;
}

Obj obj_sum(const Obj& a, const Obj& b) {
  Obj o = a;
  for (size_t i = 0; i < o.m.size(); ++i) o.m[i] += b.m[i];
  return o;
}

int obj_copies(const Obj& o) {
  int s = 0;
  for (int x : o.m) s += x;
  return s;
}

std::string obj_str(const Category& C, const Obj& o) {
  std::string s;
  for (int i = 0; i < C.n(); ++i) {
    if (o.m[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (o.m[i] > 1) s += std::to_string(o.m[i]) + "*";
    s += C.names[i];
  }
  return s.empty() ? "0" : s;
}

std::vector<std::pair<int, int>> copies(const Obj& o) {
  std::vector<std::pair<int, int>> v;
  for (int i = 0; i < (int)o.m.size(); ++i)
    for (int c = 0; c < o.m[i]; ++c) v.push_back({i, c});
  return v;
}

HomLayout hom_layout(const Category& C, const Obj& X, const Obj& Y) {
  HomLayout L;
  L.sc = copies(X);
  L.tc = copies(Y);
  L.off.assign(L.sc.size(), std::vector<int>((int)L.tc.size(), 0));
  int d = 0;
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t) {
      L.off[s][t] = d;
      d += C.hdim[L.sc[s].first][L.tc[t].first];
    }
  L.dim = d;
  return L;
}

Mor mor_zero(const Category& C, const Obj& X, const Obj& Y) {
  return {X, Y, Mat(C.f, hom_layout(C, X, Y).dim, 1)};
}

Mor mor_id(const Category& C, const Obj& X) {
  Mor m = mor_zero(C, X, X);
  HomLayout L = hom_layout(C, X, X);
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t) {
      if (L.sc[s] != L.tc[t]) continue;
      int i = L.sc[s].first;
      for (int b = 0; b < C.hdim[i][i]; ++b) m.v.at(L.off[s][t] + b, 0) = C.idc[i].at(b, 0);
    }
  return m;
}

Mor mor_basis(const Category& C, const Obj& X, const Obj& Y, int si, int ti, int b) {
  Mor m = mor_zero(C, X, Y);
  HomLayout L = hom_layout(C, X, Y);
  m.v.at(L.off[si][ti] + b, 0) = 1;
  return m;
}

Mor mor_add(const Mor& a, const Mor& b) {
  check(a.src == b.src && a.tgt == b.tgt, "mor_add: shape mismatch");
  return {a.src, a.tgt, mat_add(a.v, b.v)};
}

Mor mor_scale(const Q& s, const Mor& a) { return {a.src, a.tgt, mat_scale(s, a.v)}; }

Mat mor_block(const Category& C, const Mor& f, int si, int ti) {
  HomLayout L = hom_layout(C, f.src, f.tgt);
  int d = C.hdim[L.sc[si].first][L.tc[ti].first];
  Mat b(C.f, d, 1);
  for (int k = 0; k < d; ++k) b.at(k, 0) = f.v.at(L.off[si][ti] + k, 0);
  return b;
}

Mor compose(const Category& C, const Mor& g, const Mor& f) {
  check(f.tgt == g.src, "compose: mismatched middle object");
  Mor h = mor_zero(C, f.src, g.tgt);
  HomLayout Lf = hom_layout(C, f.src, f.tgt);
  HomLayout Lg = hom_layout(C, g.src, g.tgt);
  HomLayout Lh = hom_layout(C, f.src, g.tgt);
  for (size_t s = 0; s < Lf.sc.size(); ++s) {
    int i = Lf.sc[s].first;
    for (size_t m = 0; m < Lf.tc.size(); ++m) {
      int j = Lf.tc[m].first;
      for (size_t t = 0; t < Lg.tc.size(); ++t) {
        int k = Lg.tc[t].first;
        for (int b1 = 0; b1 < C.hdim[i][j]; ++b1) {
          Q c1 = f.v.at(Lf.off[s][m] + b1, 0);
          if (c1 == 0) continue;
          for (int b2 = 0; b2 < C.hdim[j][k]; ++b2) {
            Q c2 = g.v.at(Lg.off[m][t] + b2, 0);
            if (c2 == 0) continue;
            const Mat& tensor = C.comp[i][j][k];
            int col = b1 * C.hdim[j][k] + b2;
            for (int r = 0; r < C.hdim[i][k]; ++r)
              h.v.at(Lh.off[s][t] + r, 0) += c1 * c2 * tensor.at(r, col);
          }
        }
      }
    }
  }
  for (Q& x : h.v.a) x = fnormalize(C.f, x);
  return h;
}

Mat post_matrix(const Category& C, const Mor& f, const Obj& W) {
  HomLayout L = hom_layout(C, W, f.src);
  HomLayout Lt = hom_layout(C, W, f.tgt);
  Mat M(C.f, Lt.dim, L.dim);
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t)
      for (int b = 0; b < C.hdim[L.sc[s].first][L.tc[t].first]; ++b) {
        Mor h = compose(C, f, mor_basis(C, W, f.src, (int)s, (int)t, b));
        for (int r = 0; r < Lt.dim; ++r) M.at(r, L.off[s][t] + b) = h.v.at(r, 0);
      }
  return M;
}

Mat pre_matrix(const Category& C, const Mor& f, const Obj& Z) {
  HomLayout L = hom_layout(C, f.tgt, Z);
  HomLayout Ls = hom_layout(C, f.src, Z);
  Mat M(C.f, Ls.dim, L.dim);
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t)
      for (int b = 0; b < C.hdim[L.sc[s].first][L.tc[t].first]; ++b) {
        Mor h = compose(C, mor_basis(C, f.tgt, Z, (int)s, (int)t, b), f);
        for (int r = 0; r < Ls.dim; ++r) M.at(r, L.off[s][t] + b) = h.v.at(r, 0);
      }
  return M;
}

/* Jacobson radical of End(i) by the trace form (valid in characteristic 0 or
 * p > dim End); a nilpotency check below catches bad inputs. */
Subspace Category::radical(int i, int j) const {
  if (i != j) {
    Subspace s;
    s.ambient = hdim[i][j];
    s.basis = Mat::id(f, hdim[i][j]);
    return s;
  }
  int d = hdim[i][i];
  /* Left multiplication operator of basis element b on End(i). */
  auto lmul = [&](int b) {
    Mat M(f, d, d);
    for (int x = 0; x < d; ++x) {
      Mat col = comp_col(i, i, i, x, b);  // b∘x
      for (int r = 0; r < d; ++r) M.at(r, x) = col.at(r, 0);
    }
    return M;
  };
  std::vector<Mat> L(d);
  for (int b = 0; b < d; ++b) L[b] = lmul(b);
  Mat T(f, d, d);  // T[y][x] = trace of left mult by x∘y... bilinear trace form tr(L_x L_y)
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Mat P = mat_mul(L[x], L[y]);
      Q tr(0);
      for (int k = 0; k < d; ++k) tr += P.at(k, k);
      T.at(y, x) = fnormalize(f, tr);
    }
  return kernel_basis(T);
}

void Category::validate() const {
  int N = n();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      check((int)bname[i][j].size() == hdim[i][j], "basis name count mismatch");
      for (int k = 0; k < N; ++k) {
        check(comp[i][j][k].r == hdim[i][k] && comp[i][j][k].c == hdim[i][j] * hdim[j][k],
              "comp tensor shape");
      }
    }
  /* Unit laws via morphisms on single indecomposables. */
  for (int i = 0; i < N; ++i) {
    check(idc[i].r == hdim[i][i] && idc[i].c == 1, "id coefficient shape");
    Obj oi = obj_indec(*this, i);
    Mor id = mor_id(*this, oi);
    for (int j = 0; j < N; ++j) {
      Obj oj = obj_indec(*this, j);
      for (int b = 0; b < hdim[i][j]; ++b) {
        Mor f = mor_basis(*this, oi, oj, 0, 0, b);
        check(compose(*this, f, id).v == f.v, "left unit law fails at " + names[i]);
        check(compose(*this, mor_id(*this, oj), f).v == f.v, "right unit law fails");
      }
    }
  }
  /* Associativity on all basis triples. */
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          Obj oi = obj_indec(*this, i), oj = obj_indec(*this, j), ok = obj_indec(*this, k),
              ol = obj_indec(*this, l);
          for (int b1 = 0; b1 < hdim[i][j]; ++b1)
            for (int b2 = 0; b2 < hdim[j][k]; ++b2)
              for (int b3 = 0; b3 < hdim[k][l]; ++b3) {
                Mor f1 = mor_basis(*this, oi, oj, 0, 0, b1);
                Mor f2 = mor_basis(*this, oj, ok, 0, 0, b2);
                Mor f3 = mor_basis(*this, ok, ol, 0, 0, b3);
                Mor lhs = compose(*this, f3, compose(*this, f2, f1));
                Mor rhs = compose(*this, compose(*this, f3, f2), f1);
                check(lhs.v == rhs.v, "associativity fails");
              }
        }
  /* End(i) local: radical has codimension 1 and is nilpotent. */
  for (int i = 0; i < N; ++i) {
    Subspace rad = radical(i, i);
    check(hdim[i][i] - rad.dim() == 1, "End(" + names[i] + ") not local");
    /* Nilpotency: powers of the radical span must shrink to zero. */
    Subspace cur = rad;
    for (int step = 0; step <= hdim[i][i] && cur.dim() > 0; ++step) {
      std::vector<Mat> prods;
      for (int x = 0; x < cur.dim(); ++x)
        for (int y = 0; y < rad.dim(); ++y) {
          Mat acc(f, hdim[i][i], 1);
          for (int b1 = 0; b1 < hdim[i][i]; ++b1)
            for (int b2 = 0; b2 < hdim[i][i]; ++b2) {
              Q c = cur.basis.at(b1, x) * rad.basis.at(b2, y);
              if (c == 0) continue;
              Mat col = comp_col(i, i, i, b1, b2);
              acc = mat_add(acc, mat_scale(c, col));
            }
          prods.push_back(acc);
        }
      Subspace next = span_of(prods, hdim[i][i], f);
      check(next.dim() < cur.dim() || cur.dim() == 0, "radical of End(" + names[i] + ") not nilpotent");
      cur = next;
    }
    check(cur.dim() == 0, "radical of End(" + names[i] + ") not nilpotent");
  }
}

Subspace radical_into(const Category& C, int i, const Obj& X) {
  HomLayout L = hom_layout(C, obj_indec(C, i), X);
  std::vector<Mat> gens;
  for (size_t t = 0; t < L.tc.size(); ++t) {
    int j = L.tc[t].first;
    Subspace r = C.radical(i, j);
    for (int k = 0; k < r.dim(); ++k) {
      Mat v(C.f, L.dim, 1);
      for (int b = 0; b < C.hdim[i][j]; ++b) v.at(L.off[0][t] + b, 0) = r.basis.at(b, k);
      gens.push_back(v);
    }
  }
  return span_of(gens, L.dim, C.f);
}

bool is_right_minimal(const Category& C, const Mor& f) {
  for (int i = 0; i < C.n(); ++i) {
    Obj oi = obj_indec(C, i);
    Subspace ker = kernel_basis(post_matrix(C, f, oi));
    if (ker.dim() == 0) continue;
    if (!subspace_contains(radical_into(C, i, f.src), ker.basis)) return false;
  }
  return true;
}

}  // namespace xk
