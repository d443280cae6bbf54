#include "extrikit/funcat.hpp"

namespace xk {

void Bimod::init(const Category& cat) {
  C = &cat;
  int N = cat.n();
  dim.assign(N, std::vector<int>(N, 0));
}

void Bimod::init_zero_maps() {
  int N = C->n();
  lact.assign(N, std::vector<std::vector<std::vector<Mat>>>(
                     N, std::vector<std::vector<Mat>>(N)));
  ract = lact;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        lact[i][j][k].assign(C->hdim[j][k], Mat(C->f, dim[i][k], dim[i][j]));
        /* ract[j][i][i2][b], b: i2 -> i, maps E(i,j) -> E(i2,j) */
        ract[i][j][k].assign(C->hdim[k][j], Mat(C->f, dim[k][i], dim[j][i]));
      }
}

bool Bimod::is_zero() const {
  for (auto& row : dim)
    for (int d : row)
      if (d) return false;
  return true;
}

void Bimod::validate() const {
  int N = C->n();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      /* identities act as identity */
      Mat L(C->f, dim[i][j], dim[i][j]);
      for (int b = 0; b < C->hdim[j][j]; ++b)
        L = mat_add(L, mat_scale(C->idc[j].at(b, 0), lact[i][j][j][b]));
      check(L == Mat::id(C->f, dim[i][j]), "bimodule: left unit law");
      Mat R(C->f, dim[i][j], dim[i][j]);
      for (int b = 0; b < C->hdim[i][i]; ++b)
        R = mat_add(R, mat_scale(C->idc[i].at(b, 0), ract[j][i][i][b]));
      check(R == Mat::id(C->f, dim[i][j]), "bimodule: right unit law");
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int j2 = 0; j2 < N; ++j2)
        for (int j3 = 0; j3 < N; ++j3)
          for (int b1 = 0; b1 < C->hdim[j][j2]; ++b1)
            for (int b2 = 0; b2 < C->hdim[j2][j3]; ++b2) {
              Mat lhs(C->f, dim[i][j3], dim[i][j]);
              Mat cc = C->comp_col(j, j2, j3, b1, b2);
              for (int r = 0; r < C->hdim[j][j3]; ++r)
                lhs = mat_add(lhs, mat_scale(cc.at(r, 0), lact[i][j][j3][r]));
              check(lhs == mat_mul(lact[i][j2][j3][b2], lact[i][j][j2][b1]),
                    "bimodule: left action not multiplicative");
            }
  for (int j = 0; j < N; ++j)
    for (int i3 = 0; i3 < N; ++i3)
      for (int i2 = 0; i2 < N; ++i2)
        for (int i = 0; i < N; ++i)
          for (int b1 = 0; b1 < C->hdim[i3][i2]; ++b1)
            for (int b2 = 0; b2 < C->hdim[i2][i]; ++b2) {
              Mat lhs(C->f, dim[i3][j], dim[i][j]);
              Mat cc = C->comp_col(i3, i2, i, b1, b2);
              for (int r = 0; r < C->hdim[i3][i]; ++r)
                lhs = mat_add(lhs, mat_scale(cc.at(r, 0), ract[j][i][i3][r]));
              check(lhs == mat_mul(ract[j][i2][i3][b1], ract[j][i][i2][b2]),
                    "bimodule: right action not multiplicative");
            }
  for (int i = 0; i < N; ++i)
    for (int i2 = 0; i2 < N; ++i2)
      for (int j = 0; j < N; ++j)
        for (int j2 = 0; j2 < N; ++j2)
          for (int b = 0; b < C->hdim[j][j2]; ++b)
            for (int b2 = 0; b2 < C->hdim[i2][i]; ++b2)
              check(mat_mul(ract[j2][i][i2][b2], lact[i][j][j2][b]) ==
                        mat_mul(lact[i2][j][j2][b], ract[j][i][i2][b2]),
                    "bimodule: actions do not commute");
}

Bimod hom_bimod(const Category& C) {
  Bimod E;
  E.init(C);
  E.dim = C.hdim;
  E.init_zero_maps();
  int N = C.n();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int j2 = 0; j2 < N; ++j2)
        for (int b = 0; b < C.hdim[j][j2]; ++b)
          E.lact[i][j][j2][b] =
              post_matrix(C, mor_basis(C, obj_indec(C, j), obj_indec(C, j2), 0, 0, b),
                          obj_indec(C, i));
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      for (int i2 = 0; i2 < N; ++i2)
        for (int b = 0; b < C.hdim[i2][i]; ++b)
          E.ract[j][i][i2][b] =
              pre_matrix(C, mor_basis(C, obj_indec(C, i2), obj_indec(C, i), 0, 0, b),
                         obj_indec(C, j));
  return E;
}

BiLayout bi_layout(const Bimod& E, const Obj& X, const Obj& Y) {
  BiLayout L;
  L.sc = copies(X);
  L.tc = copies(Y);
  L.off.assign(L.sc.size(), std::vector<int>((int)L.tc.size(), 0));
  int d = 0;
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t) {
      L.off[s][t] = d;
      d += E.dim[L.sc[s].first][L.tc[t].first];
    }
  L.dim = d;
  return L;
}

Mat bi_push(const Bimod& E, const Mor& a, const Obj& X) {
  const Category& C = *E.C;
  BiLayout Ls = bi_layout(E, X, a.src);
  BiLayout Lt = bi_layout(E, X, a.tgt);
  Mat M(C.f, Lt.dim, Ls.dim);
  for (size_t xc = 0; xc < Ls.sc.size(); ++xc) {
    int i = Ls.sc[xc].first;
    for (size_t yc = 0; yc < Ls.tc.size(); ++yc) {
      int j = Ls.tc[yc].first;
      for (size_t y2c = 0; y2c < Lt.tc.size(); ++y2c) {
        int j2 = Lt.tc[y2c].first;
        Mat blk = mor_block(C, a, (int)yc, (int)y2c);
        for (int b = 0; b < C.hdim[j][j2]; ++b) {
          if (blk.at(b, 0) == 0) continue;
          const Mat& A = E.lact[i][j][j2][b];
          for (int r = 0; r < A.r; ++r)
            for (int c = 0; c < A.c; ++c)
              M.at(Lt.off[xc][y2c] + r, Ls.off[xc][yc] + c) =
                  fnormalize(C.f, M.at(Lt.off[xc][y2c] + r, Ls.off[xc][yc] + c) +
                                      blk.at(b, 0) * A.at(r, c));
        }
      }
    }
  }
  return M;
}

Mat bi_pull(const Bimod& E, const Mor& c, const Obj& Y) {
  const Category& C = *E.C;
  BiLayout Ls = bi_layout(E, c.tgt, Y);   // E(X,Y), X = c.tgt
  BiLayout Lt = bi_layout(E, c.src, Y);   // E(X2,Y)
  Mat M(C.f, Lt.dim, Ls.dim);
  for (size_t yc = 0; yc < Ls.tc.size(); ++yc) {
    int j = Ls.tc[yc].first;
    for (size_t xc = 0; xc < Ls.sc.size(); ++xc) {
      int i = Ls.sc[xc].first;
      for (size_t x2c = 0; x2c < Lt.sc.size(); ++x2c) {
        int i2 = Lt.sc[x2c].first;
        Mat blk = mor_block(C, c, (int)x2c, (int)xc);
        for (int b = 0; b < C.hdim[i2][i]; ++b) {
          if (blk.at(b, 0) == 0) continue;
          const Mat& A = E.ract[j][i][i2][b];
          for (int r = 0; r < A.r; ++r)
            for (int cc = 0; cc < A.c; ++cc)
              M.at(Lt.off[x2c][yc] + r, Ls.off[xc][yc] + cc) =
                  fnormalize(C.f, M.at(Lt.off[x2c][yc] + r, Ls.off[xc][yc] + cc) +
                                      blk.at(b, 0) * A.at(r, cc));
        }
      }
    }
  }
  return M;
}

void CMod::init(const Category& cat, bool covariant) {
  C = &cat;
  cov = covariant;
  dim.assign(cat.n(), 0);
}

void CMod::init_zero_maps() {
  int N = C->n();
  act.assign(N, std::vector<std::vector<Mat>>(N));
  for (int m = 0; m < N; ++m)
    for (int m2 = 0; m2 < N; ++m2)
      act[m][m2].assign(C->hdim[m][m2], cov ? Mat(C->f, dim[m2], dim[m])
                                            : Mat(C->f, dim[m], dim[m2]));
}

bool CMod::is_zero() const {
  for (int d : dim)
    if (d) return false;
  return true;
}

void CMod::validate() const {
  int N = C->n();
  for (int m = 0; m < N; ++m) {
    Mat I(C->f, dim[m], dim[m]);
    for (int b = 0; b < C->hdim[m][m]; ++b)
      I = mat_add(I, mat_scale(C->idc[m].at(b, 0), act[m][m][b]));
    check(I == Mat::id(C->f, dim[m]), "module: unit law");
  }
  for (int m = 0; m < N; ++m)
    for (int m2 = 0; m2 < N; ++m2)
      for (int m3 = 0; m3 < N; ++m3)
        for (int b1 = 0; b1 < C->hdim[m][m2]; ++b1)
          for (int b2 = 0; b2 < C->hdim[m2][m3]; ++b2) {
            Mat cc = C->comp_col(m, m2, m3, b1, b2);
            Mat lhs = cov ? Mat(C->f, dim[m3], dim[m]) : Mat(C->f, dim[m], dim[m3]);
            for (int r = 0; r < C->hdim[m][m3]; ++r)
              lhs = mat_add(lhs, mat_scale(cc.at(r, 0), act[m][m3][r]));
            Mat rhs = cov ? mat_mul(act[m2][m3][b2], act[m][m2][b1])
                          : mat_mul(act[m][m2][b1], act[m2][m3][b2]);
            check(lhs == rhs, "module: action not functorial");
          }
}

ModLayout mod_layout(const CMod& F, const Obj& X) {
  ModLayout L;
  L.cp = copies(X);
  int d = 0;
  for (auto& [i, c] : L.cp) {
    L.off.push_back(d);
    d += F.dim[i];
  }
  L.dim = d;
  return L;
}

Mat mod_map(const CMod& F, const Mor& f) {
  const Category& C = *F.C;
  ModLayout Ls = mod_layout(F, f.src);
  ModLayout Lt = mod_layout(F, f.tgt);
  const ModLayout& Lfrom = F.cov ? Ls : Lt;
  const ModLayout& Lto = F.cov ? Lt : Ls;
  Mat M(C.f, Lto.dim, Lfrom.dim);
  for (size_t s = 0; s < Ls.cp.size(); ++s) {
    int i = Ls.cp[s].first;
    for (size_t t = 0; t < Lt.cp.size(); ++t) {
      int j = Lt.cp[t].first;
      Mat blk = mor_block(C, f, (int)s, (int)t);
      for (int b = 0; b < C.hdim[i][j]; ++b) {
        if (blk.at(b, 0) == 0) continue;
        const Mat& A = F.act[i][j][b];
        int ro = F.cov ? Lt.off[t] : Ls.off[s];
        int co = F.cov ? Ls.off[s] : Lt.off[t];
        for (int r = 0; r < A.r; ++r)
          for (int c = 0; c < A.c; ++c)
            M.at(ro + r, co + c) = fnormalize(C.f, M.at(ro + r, co + c) + blk.at(b, 0) * A.at(r, c));
      }
    }
  }
  return M;
}

CMod cov_slice(const Bimod& E, const Obj& A) {
  const Category& C = *E.C;
  CMod F;
  F.init(C, true);
  for (int m = 0; m < C.n(); ++m) F.dim[m] = bi_layout(E, A, obj_indec(C, m)).dim;
  F.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b)
        F.act[m][m2][b] =
            bi_push(E, mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b), A);
  return F;
}

CMod contra_slice(const Bimod& E, const Obj& A) {
  const Category& C = *E.C;
  CMod F;
  F.init(C, false);
  for (int m = 0; m < C.n(); ++m) F.dim[m] = bi_layout(E, obj_indec(C, m), A).dim;
  F.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b)
        F.act[m][m2][b] =
            bi_pull(E, mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b), A);
  return F;
}

CMod hom_cov(const Category& C, const Obj& A) {
  CMod F;
  F.init(C, true);
  for (int m = 0; m < C.n(); ++m) F.dim[m] = hom_layout(C, A, obj_indec(C, m)).dim;
  F.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b)
        F.act[m][m2][b] =
            post_matrix(C, mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b), A);
  return F;
}

CMod hom_contra(const Category& C, const Obj& A) {
  CMod F;
  F.init(C, false);
  for (int m = 0; m < C.n(); ++m) F.dim[m] = hom_layout(C, obj_indec(C, m), A).dim;
  F.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b)
        F.act[m][m2][b] =
            pre_matrix(C, mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b), A);
  return F;
}

CMod mod_dsum(const CMod& F, const CMod& G) {
  check(F.C == G.C && F.cov == G.cov, "mod_dsum: incompatible modules");
  const Category& C = *F.C;
  CMod H;
  H.init(C, F.cov);
  for (int m = 0; m < C.n(); ++m) H.dim[m] = F.dim[m] + G.dim[m];
  H.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b)
        H.act[m][m2][b] = diag_cat({F.act[m][m2][b], G.act[m][m2][b]}, C.f);
  return H;
}

bool is_natural(const ModMor& phi) {
  const Category& C = *phi.S.C;
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        Mat lhs, rhs;
        if (phi.S.cov) {
          lhs = mat_mul(phi.T.act[m][m2][b], phi.comp[m]);
          rhs = mat_mul(phi.comp[m2], phi.S.act[m][m2][b]);
        } else {
          lhs = mat_mul(phi.T.act[m][m2][b], phi.comp[m2]);
          rhs = mat_mul(phi.comp[m], phi.S.act[m][m2][b]);
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

ModMor mod_zero_mor(const CMod& S, const CMod& T) {
  ModMor z{S, T, {}};
  for (int m = 0; m < S.C->n(); ++m) z.comp.push_back(Mat(S.C->f, T.dim[m], S.dim[m]));
  return z;
}

/* vec is row-major: index r*cols + c. */
static Mat vec_of(const Mat& M) {
  Mat v(M.f, M.r * M.c, 1);
  for (int r = 0; r < M.r; ++r)
    for (int c = 0; c < M.c; ++c) v.at(r * M.c + c, 0) = M.at(r, c);
  return v;
}

std::vector<ModMor> nat_space(const CMod& F, const CMod& G) {
  check(F.C == G.C, "nat_space: different categories");
  check(F.cov == G.cov, "nat_space: variance mismatch");
  const Category& C = *F.C;
  int N = C.n();
  std::vector<int> voff(N + 1, 0);
  for (int m = 0; m < N; ++m) voff[m + 1] = voff[m] + G.dim[m] * F.dim[m];
  int unknowns = voff[N];
  std::vector<Mat> rows;
  for (int m = 0; m < N; ++m)
    for (int m2 = 0; m2 < N; ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        /* covariant: G(b)∘φ_m = φ_{m2}∘F(b); contravariant: φ_m∘F(b) = G(b)∘φ_{m2} */
        int sm = F.cov ? m : m2;   // index of the φ multiplied on the right by nothing
        int tm = F.cov ? m2 : m;
        /* equation maps F(sm) -> G(tm) */
        int eq_r = G.dim[tm], eq_c = F.dim[sm];
        if (eq_r * eq_c == 0) continue;
        Mat block(C.f, eq_r * eq_c, unknowns);
        /* term G(b)∘φ_sm: vec = (G.act ⊗ I) vec(φ_sm) */
        const Mat& gb = G.act[m][m2][b];
        Mat t1 = kronecker_tensor(gb, Mat::id(C.f, F.dim[sm]));
        for (int r = 0; r < t1.r; ++r)
          for (int c = 0; c < t1.c; ++c) block.at(r, voff[sm] + c) = t1.at(r, c);
        /* term φ_tm∘F(b): vec = (I ⊗ F.actᵀ) vec(φ_tm) */
        const Mat& fb = F.act[m][m2][b];
        Mat t2 = kronecker_tensor(Mat::id(C.f, G.dim[tm]), transpose(fb));
        for (int r = 0; r < t2.r; ++r)
          for (int c = 0; c < t2.c; ++c)
            block.at(r, voff[tm] + c) = fnormalize(C.f, block.at(r, voff[tm] + c) - t2.at(r, c));
        rows.push_back(block);
      }
  Mat sys(C.f, 0, unknowns);
  for (Mat& r : rows) sys = vcat(sys, r);
  Subspace ker = kernel_basis(sys);
  std::vector<ModMor> basis;
  for (int k = 0; k < ker.dim(); ++k) {
    ModMor phi = mod_zero_mor(F, G);
    for (int m = 0; m < N; ++m)
      for (int r = 0; r < G.dim[m]; ++r)
        for (int c = 0; c < F.dim[m]; ++c)
          phi.comp[m].at(r, c) = ker.basis.at(voff[m] + r * F.dim[m] + c, k);
    basis.push_back(std::move(phi));
  }
  return basis;
}

static Mat stack_mor(const ModMor& phi) {
  Mat v(phi.S.C->f, 0, 1);
  for (const Mat& c : phi.comp) v = vcat(v, vec_of(c));
  return v;
}

Mat nat_coords(const std::vector<ModMor>& basis, const ModMor& phi) {
  check(!basis.empty() || stack_mor(phi).is_zero(), "nat_coords: empty basis, nonzero element");
  if (basis.empty()) return Mat(phi.S.C->f, 0, 1);
  Mat B(basis[0].S.C->f, stack_mor(basis[0]).r, (int)basis.size());
  for (size_t k = 0; k < basis.size(); ++k) {
    Mat col = stack_mor(basis[k]);
    for (int r = 0; r < col.r; ++r) B.at(r, (int)k) = col.at(r, 0);
  }
  return coords_in(B, stack_mor(phi));
}

SubquotientMod mod_kernel(const ModMor& phi) {
  const Category& C = *phi.S.C;
  SubquotientMod out;
  out.mod.init(C, phi.S.cov);
  std::vector<Mat> incl(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Subspace k = kernel_basis(phi.comp[m]);
    out.mod.dim[m] = k.dim();
    incl[m] = k.basis;
  }
  out.mod.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        const Mat& a = phi.S.act[m][m2][b];
        if (phi.S.cov)
          out.mod.act[m][m2][b] = coords_in(incl[m2], mat_mul(a, incl[m]));
        else
          out.mod.act[m][m2][b] = coords_in(incl[m], mat_mul(a, incl[m2]));
      }
  out.incl_or_proj = {out.mod, phi.S, incl};
  return out;
}

SubquotientMod mod_cokernel(const ModMor& phi) {
  const Category& C = *phi.S.C;
  SubquotientMod out;
  out.mod.init(C, phi.T.cov);
  std::vector<Mat> proj(C.n());
  out.section.resize(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Cokernel ck = cokernel(phi.comp[m]);
    out.mod.dim[m] = ck.quotient_dim;
    proj[m] = ck.projection;
    out.section[m] = ck.section;
  }
  out.mod.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        const Mat& a = phi.T.act[m][m2][b];
        if (phi.T.cov)
          out.mod.act[m][m2][b] = mat_mul(proj[m2], mat_mul(a, out.section[m]));
        else
          out.mod.act[m][m2][b] = mat_mul(proj[m], mat_mul(a, out.section[m2]));
      }
  out.incl_or_proj = {phi.T, out.mod, proj};
  return out;
}

SubquotientMod mod_image(const ModMor& phi) {
  const Category& C = *phi.S.C;
  SubquotientMod out;
  out.mod.init(C, phi.T.cov);
  std::vector<Mat> incl(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Subspace im = image_basis(phi.comp[m]);
    out.mod.dim[m] = im.dim();
    incl[m] = im.basis;
  }
  out.mod.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        const Mat& a = phi.T.act[m][m2][b];
        if (phi.T.cov)
          out.mod.act[m][m2][b] = coords_in(incl[m2], mat_mul(a, incl[m]));
        else
          out.mod.act[m][m2][b] = coords_in(incl[m], mat_mul(a, incl[m2]));
      }
  out.incl_or_proj = {out.mod, phi.T, incl};
  return out;
}

Subspace projective_ideal(const Category& C, const Bimod& E, const Obj& X, const Obj& Y) {
  HomLayout L = hom_layout(C, X, Y);
  std::vector<Mat> rows;
  int total = 0;
  for (int a = 0; a < C.n(); ++a)
    total += bi_layout(E, X, obj_indec(C, a)).dim * bi_layout(E, Y, obj_indec(C, a)).dim;
  Mat sys(C.f, total, L.dim);
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t)
      for (int b = 0; b < C.hdim[L.sc[s].first][L.tc[t].first]; ++b) {
        Mor f = mor_basis(C, X, Y, (int)s, (int)t, b);
        int ro = 0;
        for (int a = 0; a < C.n(); ++a) {
          Mat P = bi_pull(E, f, obj_indec(C, a));  // E(Y,a) -> E(X,a)
          for (int r = 0; r < P.r; ++r)
            for (int c = 0; c < P.c; ++c) sys.at(ro + r * P.c + c, L.off[s][t] + b) = P.at(r, c);
          ro += P.r * P.c;
        }
      }
  return kernel_basis(sys);
}

Subspace injective_ideal(const Category& C, const Bimod& E, const Obj& X, const Obj& Y) {
  HomLayout L = hom_layout(C, X, Y);
  int total = 0;
  for (int a = 0; a < C.n(); ++a)
    total += bi_layout(E, obj_indec(C, a), X).dim * bi_layout(E, obj_indec(C, a), Y).dim;
  Mat sys(C.f, total, L.dim);
  for (size_t s = 0; s < L.sc.size(); ++s)
    for (size_t t = 0; t < L.tc.size(); ++t)
      for (int b = 0; b < C.hdim[L.sc[s].first][L.tc[t].first]; ++b) {
        Mor f = mor_basis(C, X, Y, (int)s, (int)t, b);
        int ro = 0;
        for (int a = 0; a < C.n(); ++a) {
          Mat P = bi_push(E, f, obj_indec(C, a));  // E(a,X) -> E(a,Y)
          for (int r = 0; r < P.r; ++r)
            for (int c = 0; c < P.c; ++c) sys.at(ro + r * P.c + c, L.off[s][t] + b) = P.at(r, c);
          ro += P.r * P.c;
        }
      }
  return kernel_basis(sys);
}

StableHom stable_hom(const Category& C, const Subspace& ideal, const Obj& X, const Obj& Y) {
  (void)C;
  Cokernel ck = cokernel(ideal.basis);
  return {ck.quotient_dim, ck.projection};
}

bool is_projective_object(const Category& C, const Bimod& E, int i) {
  for (int j = 0; j < C.n(); ++j)
    if (E.dim[i][j] != 0) return false;
  return true;
}

bool is_injective_object(const Category& C, const Bimod& E, int i) {
  for (int j = 0; j < C.n(); ++j)
    if (E.dim[j][i] != 0) return false;
  return true;
}

static Mat swap_perm(Field f, const std::vector<int>& srows, const std::vector<int>& trows,
                     const std::vector<std::vector<int>>& blockdim) {
  /* From (s outer, t, basis) order to (t outer, s, basis) order. */
  int dim = 0;
  for (size_t s = 0; s < srows.size(); ++s)
    for (size_t t = 0; t < trows.size(); ++t) dim += blockdim[s][t];
  Mat P(f, dim, dim);
  std::vector<std::vector<int>> off1(srows.size(), std::vector<int>(trows.size()));
  int d = 0;
  for (size_t s = 0; s < srows.size(); ++s)
    for (size_t t = 0; t < trows.size(); ++t) {
      off1[s][t] = d;
      d += blockdim[s][t];
    }
  d = 0;
  for (size_t t = 0; t < trows.size(); ++t)
    for (size_t s = 0; s < srows.size(); ++s)
      for (int b = 0; b < blockdim[s][t]; ++b) {
        P.at(d, off1[s][t] + b) = 1;
        ++d;
      }
  return P;
}

Mat cov_slice_perm(const Bimod& E, const Obj& A, const Obj& Y) {
  auto sc = copies(A), tc = copies(Y);
  std::vector<std::vector<int>> bd(sc.size(), std::vector<int>(tc.size()));
  for (size_t s = 0; s < sc.size(); ++s)
    for (size_t t = 0; t < tc.size(); ++t) bd[s][t] = E.dim[sc[s].first][tc[t].first];
  return swap_perm(E.C->f, std::vector<int>(sc.size()), std::vector<int>(tc.size()), bd);
}

Mat hom_cov_perm(const Category& C, const Obj& A, const Obj& Y) {
  auto sc = copies(A), tc = copies(Y);
  std::vector<std::vector<int>> bd(sc.size(), std::vector<int>(tc.size()));
  for (size_t s = 0; s < sc.size(); ++s)
    for (size_t t = 0; t < tc.size(); ++t) bd[s][t] = C.hdim[sc[s].first][tc[t].first];
  return swap_perm(C.f, std::vector<int>(sc.size()), std::vector<int>(tc.size()), bd);
}

}  // namespace xk
