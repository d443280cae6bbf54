#include "extrikit/negext.hpp"

#include <array>
#include <sstream>

namespace xk {

ModMor mod_compose(const ModMor& g, const ModMor& f) {
  ModMor out;
  out.S = f.S;
  out.T = g.T;
  out.comp.reserve(f.comp.size());
  for (size_t m = 0; m < f.comp.size(); ++m) out.comp.push_back(mat_mul(g.comp[m], f.comp[m]));
  return out;
}

std::vector<ModMor> neg_basis_I(const Tower& T, int n, const Obj& X, const Obj& Y) {
  check(n >= 1 && n <= T.nmax, "neg_basis_I: level out of range");
  return nat_space(cov_slice(T.levels[n], Y), hom_cov(*T.C, X));
}

std::vector<ModMor> neg_basis_II(const Tower& T, int n, const Obj& X, const Obj& Y) {
  check(n >= 1 && n <= T.nmax, "neg_basis_II: level out of range");
  return nat_space(contra_slice(T.levels[n], X), hom_contra(*T.C, Y));
}

int neg_dim_I(const Tower& T, int n, const Obj& X, const Obj& Y) {
  if (n == 0) return hom_layout(*T.C, X, Y).dim;
  return (int)neg_basis_I(T, n, X, Y).size();
}

int neg_dim_II(const Tower& T, int n, const Obj& X, const Obj& Y) {
  if (n == 0) return hom_layout(*T.C, X, Y).dim;
  return (int)neg_basis_II(T, n, X, Y).size();
}

/* E^n(f,-): cov_slice(E^n, tgt f) -> cov_slice(E^n, src f), pointwise pulls. */
static ModMor first_pull(const Bimod& En, const Mor& f) {
  const Category& C = *En.C;
  ModMor out;
  out.S = cov_slice(En, f.tgt);
  out.T = cov_slice(En, f.src);
  for (int m = 0; m < C.n(); ++m) out.comp.push_back(bi_pull(En, f, obj_indec(C, m)));
  return out;
}

/* E^n(-,f): contra_slice(E^n, src f) -> contra_slice(E^n, tgt f). */
static ModMor second_push(const Bimod& En, const Mor& f) {
  const Category& C = *En.C;
  ModMor out;
  out.S = contra_slice(En, f.src);
  out.T = contra_slice(En, f.tgt);
  for (int m = 0; m < C.n(); ++m) out.comp.push_back(bi_push(En, f, obj_indec(C, m)));
  return out;
}

/* Matrix of phi |-> phi∘pre between the supplied nat bases. */
static Mat induced(const std::vector<ModMor>& srcb, const std::vector<ModMor>& tgtb,
                   const ModMor& pre, Field f) {
  Mat M(f, (int)tgtb.size(), (int)srcb.size());
  for (size_t r = 0; r < srcb.size(); ++r) {
    Mat co = nat_coords(tgtb, mod_compose(srcb[r], pre));
    for (int i = 0; i < co.r; ++i) M.set(i, (int)r, co.at(i, 0));
  }
  return M;
}

Mor eval_neg_I(const Tower& T, const ModMor& phi, const Obj& X, const Obj& Y,
               const Mat& lambda, const Obj& Q, int n) {
  const Category& C = *T.C;
  const Bimod& En = T.levels[n];
  BiLayout bl = bi_layout(En, Y, Q);
  check(lambda.r == bl.dim && lambda.c == 1, "eval_neg_I: element shape mismatch");
  Mor out = mor_zero(C, X, Q);
  HomLayout ho = hom_layout(C, X, Q);
  auto ycp = copies(Y), qcp = copies(Q);
  for (int qi = 0; qi < (int)qcp.size(); ++qi) {
    int p = qcp[qi].first;
    int sd = 0;
    for (auto [yp, k] : ycp) {
      (void)k;
      sd += En.dim[yp][p];
    }
    Mat vec(C.f, sd, 1);
    int pos = 0;
    for (int yi = 0; yi < (int)ycp.size(); ++yi)
      for (int b = 0; b < En.dim[ycp[yi].first][p]; ++b)
        vec.set(pos++, 0, lambda.at(bl.off[yi][qi] + b, 0));
    Mat res = mat_mul(phi.comp[p], vec);  // coordinates in C(X, p)
    HomLayout hp = hom_layout(C, X, obj_indec(C, p));
    for (int si = 0; si < (int)ho.sc.size(); ++si)
      for (int b = 0; b < C.hdim[ho.sc[si].first][p]; ++b)
        out.v.set(ho.off[si][qi] + b, 0, res.at(hp.off[si][0] + b, 0));
  }
  return out;
}

Mor eval_neg_II(const Tower& T, const ModMor& phi, const Obj& X, const Obj& Y,
                const Mat& lambda, const Obj& J, int n) {
  const Category& C = *T.C;
  const Bimod& En = T.levels[n];
  BiLayout bl = bi_layout(En, J, X);
  check(lambda.r == bl.dim && lambda.c == 1, "eval_neg_II: element shape mismatch");
  Mor out = mor_zero(C, J, Y);
  HomLayout ho = hom_layout(C, J, Y);
  auto jcp = copies(J), xcp = copies(X);
  for (int ji = 0; ji < (int)jcp.size(); ++ji) {
    int p = jcp[ji].first;
    int sd = 0;
    for (auto [xp, k] : xcp) {
      (void)k;
      sd += En.dim[p][xp];
    }
    Mat vec(C.f, sd, 1);
    int pos = 0;
    for (int xi = 0; xi < (int)xcp.size(); ++xi)
      for (int b = 0; b < En.dim[p][xcp[xi].first]; ++b)
        vec.set(pos++, 0, lambda.at(bl.off[ji][xi] + b, 0));
    Mat res = mat_mul(phi.comp[p], vec);  // coordinates in C(p, Y)
    HomLayout hp = hom_layout(C, obj_indec(C, p), Y);
    for (int ti = 0; ti < (int)ho.tc.size(); ++ti)
      for (int b = 0; b < C.hdim[p][ho.tc[ti].first]; ++b)
        out.v.set(ho.off[ji][ti] + b, 0, res.at(hp.off[0][ti] + b, 0));
  }
  return out;
}

Mor yoneda_cov(const Category& C, const ModMor& phi, const Obj& X, const Obj& A) {
  Mor out = mor_zero(C, X, A);
  HomLayout ho = hom_layout(C, X, A);
  auto acp = copies(A);
  for (int ai = 0; ai < (int)acp.size(); ++ai) {
    int p = acp[ai].first;
    HomLayout hA = hom_layout(C, A, obj_indec(C, p));
    Mat vec(C.f, hA.dim, 1);  // the projection A -> p of this copy
    for (int b = 0; b < C.hdim[p][p]; ++b) vec.set(hA.off[ai][0] + b, 0, C.idc[p].at(b, 0));
    Mat res = mat_mul(phi.comp[p], vec);
    HomLayout hX = hom_layout(C, X, obj_indec(C, p));
    for (int si = 0; si < (int)ho.sc.size(); ++si)
      for (int b = 0; b < C.hdim[ho.sc[si].first][p]; ++b)
        out.v.set(ho.off[si][ai] + b, 0, res.at(hX.off[si][0] + b, 0));
  }
  return out;
}

Mor yoneda_contra(const Category& C, const ModMor& phi, const Obj& Cc, const Obj& Y) {
  Mor out = mor_zero(C, Cc, Y);
  HomLayout ho = hom_layout(C, Cc, Y);
  auto ccp = copies(Cc);
  for (int ci = 0; ci < (int)ccp.size(); ++ci) {
    int p = ccp[ci].first;
    HomLayout hC = hom_layout(C, obj_indec(C, p), Cc);
    Mat vec(C.f, hC.dim, 1);  // the inclusion p -> Cc of this copy
    for (int b = 0; b < C.hdim[p][p]; ++b) vec.set(hC.off[0][ci] + b, 0, C.idc[p].at(b, 0));
    Mat res = mat_mul(phi.comp[p], vec);
    HomLayout hY = hom_layout(C, obj_indec(C, p), Y);
    for (int ti = 0; ti < (int)ho.tc.size(); ++ti)
      for (int b = 0; b < C.hdim[p][ho.tc[ti].first]; ++b)
        out.v.set(ho.off[ci][ti] + b, 0, res.at(hY.off[0][ti] + b, 0));
  }
  return out;
}

Mat neg_connecting_I(const Tower& T, const ExtElem& delta, int n, const Obj& X,
                     const std::vector<ModMor>& src_basis,
                     const std::vector<ModMor>& tgt_basis) {
  const Category& C = *T.C;
  ModMor dus = delta_upper_sharp(T, delta, n);
  if (n == 0) {
    int rows = hom_layout(C, X, delta.Aterm).dim;
    Mat M(C.f, rows, (int)src_basis.size());
    for (size_t r = 0; r < src_basis.size(); ++r) {
      Mor g = yoneda_cov(C, mod_compose(src_basis[r], dus), X, delta.Aterm);
      for (int i = 0; i < rows; ++i) M.set(i, (int)r, g.v.at(i, 0));
    }
    return M;
  }
  return induced(src_basis, tgt_basis, dus, C.f);
}

Mat neg_connecting_II(const Tower& T, const ExtElem& delta, int n, const Obj& Y,
                      const std::vector<ModMor>& src_basis,
                      const std::vector<ModMor>& tgt_basis) {
  const Category& C = *T.C;
  ModMor dls = delta_lower_sharp(T, delta, n);
  if (n == 0) {
    int rows = hom_layout(C, delta.Cterm, Y).dim;
    Mat M(C.f, rows, (int)src_basis.size());
    for (size_t r = 0; r < src_basis.size(); ++r) {
      Mor g = yoneda_contra(C, mod_compose(src_basis[r], dls), delta.Cterm, Y);
      for (int i = 0; i < rows; ++i) M.set(i, (int)r, g.v.at(i, 0));
    }
    return M;
  }
  return induced(src_basis, tgt_basis, dls, C.f);
}

static void seq_exactness(const std::vector<int>& dims, const std::vector<Mat>& maps,
                          int lo, const std::string& tag, SeqCheck& out) {
  for (size_t t = 1; t + 1 < dims.size(); ++t) {
    int deg = lo + (int)t / 3, slot = (int)t % 3;
    std::ostringstream where;
    where << tag << " degree " << deg << " slot " << slot;
    if (!mat_mul(maps[t], maps[t - 1]).is_zero()) {
      out.exact = false;
      out.failures.push_back(where.str() + ": composite nonzero");
      continue;
    }
    if (rank(maps[t - 1]) + rank(maps[t]) != dims[t]) {
      out.exact = false;
      out.failures.push_back(where.str() + ": homology nonzero");
    }
  }
}

void neg_seq_I(const Tower& T, const Conflation& conf, int lo, int hi, int xi,
               std::vector<int>& dims, std::vector<Mat>& maps) {
  const Category& C = *T.C;
  check(lo <= 0 && hi >= 0 && hi <= T.nmax, "neg_seq_I: bad degree window");
  std::array<Obj, 3> O = {conf.A, conf.B, conf.Cc};
  Obj X = obj_indec(C, xi);
  std::vector<std::array<std::vector<ModMor>, 3>> bases(-lo + 1);
  for (int n = 1; n <= -lo; ++n)
    for (int t = 0; t < 3; ++t) bases[n][t] = neg_basis_I(T, n, X, O[t]);
  dims.clear();
  maps.clear();
  for (int d = lo; d <= hi; ++d) {
    if (d < 0) {
      int n = -d;
      for (int t = 0; t < 3; ++t) dims.push_back((int)bases[n][t].size());
      maps.push_back(induced(bases[n][0], bases[n][1], first_pull(T.levels[n], conf.x), C.f));
      maps.push_back(induced(bases[n][1], bases[n][2], first_pull(T.levels[n], conf.y), C.f));
      maps.push_back(neg_connecting_I(T, conf.delta, n - 1, X, bases[n][2],
                                      n >= 2 ? bases[n - 1][0] : std::vector<ModMor>{}));
    } else if (d == 0) {
      for (int t = 0; t < 3; ++t) dims.push_back(hom_layout(C, X, O[t]).dim);
      maps.push_back(post_matrix(C, conf.x, X));
      maps.push_back(post_matrix(C, conf.y, X));
      if (d < hi) maps.push_back(lower_sharp_at(T, conf.delta, 0, X));
    } else {
      for (int t = 0; t < 3; ++t) dims.push_back(bi_layout(T.levels[d], X, O[t]).dim);
      maps.push_back(bi_push(T.levels[d], conf.x, X));
      maps.push_back(bi_push(T.levels[d], conf.y, X));
      if (d < hi) maps.push_back(lower_sharp_at(T, conf.delta, d, X));
    }
  }
}

SeqCheck neg_acyclicity_I(const Tower& T, const Conflation& conf, int lo, int hi) {
  const Category& C = *T.C;
  SeqCheck out;
  for (int xi = 0; xi < C.n(); ++xi) {
    std::vector<int> dims;
    std::vector<Mat> maps;
    neg_seq_I(T, conf, lo, hi, xi, dims, maps);
    seq_exactness(dims, maps, lo, "I[" + conf.id + "] at " + C.names[xi] + ",", out);
  }
  return out;
}

void neg_seq_II(const Tower& T, const Conflation& conf, int lo, int hi, int yi,
                std::vector<int>& dims, std::vector<Mat>& maps) {
  const Category& C = *T.C;
  check(lo <= 0 && hi >= 0 && hi <= T.nmax, "neg_seq_II: bad degree window");
  std::array<Obj, 3> O = {conf.Cc, conf.B, conf.A};
  Obj Y = obj_indec(C, yi);
  std::vector<std::array<std::vector<ModMor>, 3>> bases(-lo + 1);
  for (int n = 1; n <= -lo; ++n)
    for (int t = 0; t < 3; ++t) bases[n][t] = neg_basis_II(T, n, O[t], Y);
  dims.clear();
  maps.clear();
  for (int d = lo; d <= hi; ++d) {
    if (d < 0) {
      int n = -d;
      for (int t = 0; t < 3; ++t) dims.push_back((int)bases[n][t].size());
      maps.push_back(induced(bases[n][0], bases[n][1], second_push(T.levels[n], conf.y), C.f));
      maps.push_back(induced(bases[n][1], bases[n][2], second_push(T.levels[n], conf.x), C.f));
      maps.push_back(neg_connecting_II(T, conf.delta, n - 1, Y, bases[n][2],
                                       n >= 2 ? bases[n - 1][0] : std::vector<ModMor>{}));
    } else if (d == 0) {
      for (int t = 0; t < 3; ++t) dims.push_back(hom_layout(C, O[t], Y).dim);
      maps.push_back(pre_matrix(C, conf.y, Y));
      maps.push_back(pre_matrix(C, conf.x, Y));
      if (d < hi) maps.push_back(upper_sharp_at(T, conf.delta, 0, Y));
    } else {
      for (int t = 0; t < 3; ++t) dims.push_back(bi_layout(T.levels[d], O[t], Y).dim);
      maps.push_back(bi_pull(T.levels[d], conf.y, Y));
      maps.push_back(bi_pull(T.levels[d], conf.x, Y));
      if (d < hi) maps.push_back(upper_sharp_at(T, conf.delta, d, Y));
    }
  }
}

SeqCheck neg_acyclicity_II(const Tower& T, const Conflation& conf, int lo, int hi) {
  const Category& C = *T.C;
  SeqCheck out;
  for (int yi = 0; yi < C.n(); ++yi) {
    std::vector<int> dims;
    std::vector<Mat> maps;
    neg_seq_II(T, conf, lo, hi, yi, dims, maps);
    seq_exactness(dims, maps, lo, "II[" + conf.id + "] at " + C.names[yi] + ",", out);
  }
  return out;
}

/* ---------------- kernel iteration ---------------- */

static CMod zero_contra(const Category& C) {
  CMod z;
  z.init(C, false);
  z.init_zero_maps();
  return z;
}

static CMod kassemble(const Category& C, const KernelIter::Level& L, const Obj& F) {
  CMod out = zero_contra(C);
  bool first = true;
  for (auto [i, k] : copies(F)) {
    (void)k;
    out = first ? L.mod[i] : mod_dsum(out, L.mod[i]);
    first = false;
  }
  return out;
}

static ModMor kassemble_map(const Category& C, const KernelIter::Level& L, const Mor& f) {
  ModMor out;
  out.S = kassemble(C, L, f.src);
  out.T = kassemble(C, L, f.tgt);
  auto sc = copies(f.src), tc = copies(f.tgt);
  for (int m = 0; m < C.n(); ++m) {
    Mat M(C.f, out.T.dim[m], out.S.dim[m]);
    int coff = 0;
    for (int si = 0; si < (int)sc.size(); ++si) {
      int p = sc[si].first;
      int roff = 0;
      for (int ti = 0; ti < (int)tc.size(); ++ti) {
        int q = tc[ti].first;
        Mat coef = mor_block(C, f, si, ti);
        for (int b = 0; b < C.hdim[p][q]; ++b) {
          if (coef.at(b, 0) == 0) continue;
          const Mat& A = L.act[p][q][b].comp[m];
          for (int i = 0; i < A.r; ++i)
            for (int j = 0; j < A.c; ++j)
              M.set(roff + i, coff + j, M.at(roff + i, coff + j) + coef.at(b, 0) * A.at(i, j));
        }
        roff += L.mod[q].dim[m];
      }
      coff += L.mod[p].dim[m];
    }
    out.comp.push_back(M);
  }
  return out;
}

KernelIter kernel_iter_tower(const Category& C, const Bimod& E,
                             const std::vector<Conflation>& dom, int nmax) {
  check((int)dom.size() == C.n(), "kernel_iter_tower: need one dominant conflation per indec");
  for (int c = 0; c < C.n(); ++c)
    check(dom[c].Cc == obj_indec(C, c), "kernel_iter_tower: conflation end term mismatch");
  KernelIter K;
  K.lev.resize(nmax + 1);
  /* level 0: representables C(-,c) with postcomposition actions */
  KernelIter::Level& L0 = K.lev[0];
  L0.mod.resize(C.n());
  L0.act.assign(C.n(), std::vector<std::vector<ModMor>>(C.n()));
  for (int c = 0; c < C.n(); ++c) L0.mod[c] = hom_contra(C, obj_indec(C, c));
  for (int c = 0; c < C.n(); ++c)
    for (int c2 = 0; c2 < C.n(); ++c2)
      for (int b = 0; b < C.hdim[c][c2]; ++b) {
        Mor f = mor_basis(C, obj_indec(C, c), obj_indec(C, c2), 0, 0, b);
        ModMor a;
        a.S = L0.mod[c];
        a.T = L0.mod[c2];
        for (int m = 0; m < C.n(); ++m) a.comp.push_back(post_matrix(C, f, obj_indec(C, m)));
        L0.act[c][c2].push_back(a);
      }
  for (int n = 1; n <= nmax; ++n) {
    const KernelIter::Level& P = K.lev[n - 1];
    KernelIter::Level& L = K.lev[n];
    L.mod.resize(C.n());
    L.act.assign(C.n(), std::vector<std::vector<ModMor>>(C.n()));
    std::vector<ModMor> incl(C.n());
    for (int c = 0; c < C.n(); ++c) {
      SubquotientMod kq = mod_kernel(kassemble_map(C, P, dom[c].x));
      L.mod[c] = kq.mod;
      incl[c] = kq.incl_or_proj;
    }
    for (int c = 0; c < C.n(); ++c)
      for (int c2 = 0; c2 < C.n(); ++c2)
        for (int b = 0; b < C.hdim[c][c2]; ++b) {
          /* lift b: c -> c2 to a: F_c -> F_{c2} with a_* delta_c = b^* delta_{c2} */
          Mor bm = mor_basis(C, obj_indec(C, c), obj_indec(C, c2), 0, 0, b);
          HomLayout hf = hom_layout(C, dom[c].A, dom[c2].A);
          Mat lhs(C.f, bi_layout(E, obj_indec(C, c), dom[c2].A).dim, hf.dim);
          for (int u = 0; u < hf.dim; ++u) {
            Mor um = mor_zero(C, dom[c].A, dom[c2].A);
            um.v.set(u, 0, Q(1));
            Mat col = mat_mul(bi_push(E, um, obj_indec(C, c)), dom[c].delta.v);
            for (int i = 0; i < col.r; ++i) lhs.set(i, u, col.at(i, 0));
          }
          Mat rhs = mat_mul(bi_pull(E, bm, dom[c2].A), dom[c2].delta.v);
          auto sol = solve(lhs, rhs);
          check(sol.has_value(), "kernel_iter_tower: dominance lift unsolvable");
          Mor a = mor_zero(C, dom[c].A, dom[c2].A);
          a.v = sol->particular;
          ModMor big = kassemble_map(C, P, a);
          ModMor r;
          r.S = L.mod[c];
          r.T = L.mod[c2];
          for (int m = 0; m < C.n(); ++m)
            r.comp.push_back(
                coords_in(incl[c2].comp[m], mat_mul(big.comp[m], incl[c].comp[m])));
          L.act[c][c2].push_back(r);
        }
  }
  return K;
}

int kernel_iter_dim(const KernelIter& K, int n, int x, int c) {
  check(n >= 0 && n < (int)K.lev.size(), "kernel_iter_dim: level out of range");
  return K.lev[n].mod[c].dim[x];
}

/* ---------------- balance / comparison / alternating sum ---------------- */

BalanceReport balance_report(const ExtriInstance& inst, const Tower& T, int nmax) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  check(nmax <= T.nmax, "balance_report: tower too shallow");
  int N = C.n();
  BalanceReport R;
  R.nmax = nmax;
  R.dimI.assign(nmax, std::vector<std::vector<int>>(N, std::vector<int>(N, 0)));
  R.dimII = R.dimI;
  for (int n = 1; n <= nmax; ++n)
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        R.dimI[n - 1][x][y] = neg_dim_I(T, n, obj_indec(C, x), obj_indec(C, y));
        R.dimII[n - 1][x][y] = neg_dim_II(T, n, obj_indec(C, x), obj_indec(C, y));
        if (R.dimI[n - 1][x][y] != R.dimII[n - 1][x][y]) R.unbalanced.push_back({x, y, n});
      }
  for (int i = 0; i < N; ++i) {
    if (is_injective_object(C, E, i))
      for (const auto& cf : inst.table)
        if (kernel_basis(post_matrix(C, cf.x, obj_indec(C, i))).dim() != 0) {
          R.NI = false;
          R.failures.push_back("(NI) fails: C(" + C.names[i] + ", x of " + cf.id +
                               ") not mono");
        }
    if (is_projective_object(C, E, i))
      for (const auto& cf : inst.table)
        if (kernel_basis(pre_matrix(C, cf.y, obj_indec(C, i))).dim() != 0) {
          R.NII = false;
          R.failures.push_back("(NII) fails: C(y of " + cf.id + ", " + C.names[i] +
                               ") not mono");
        }
  }
  /* (NI+): evaluation at each flagged dominant witness, composed with the
   * quotient by the injective ideal, must stay injective */
  for (const auto& cf : inst.table) {
    if (cf.dominant) {
      for (int x = 0; x < N; ++x) {
        Obj X = obj_indec(C, x);
        auto basis = neg_basis_I(T, 1, X, cf.Cc);
        if (basis.empty()) continue;
        StableHom sh = stable_hom(C, injective_ideal(C, E, X, cf.A), X, cf.A);
        Mat M(C.f, sh.dim, (int)basis.size());
        for (size_t r = 0; r < basis.size(); ++r) {
          Mat v = mat_mul(sh.projection,
                          eval_neg_I(T, basis[r], X, cf.Cc, cf.delta.v, cf.A, 1).v);
          for (int i = 0; i < v.r; ++i) M.set(i, (int)r, v.at(i, 0));
        }
        if (kernel_basis(M).dim() != 0) {
          R.NIp = false;
          R.failures.push_back("(NI+) fails at X=" + C.names[x] + ", witness " + cf.id);
        }
      }
    }
    if (cf.codominant) {
      for (int y = 0; y < N; ++y) {
        Obj Y = obj_indec(C, y);
        auto basis = neg_basis_II(T, 1, cf.A, Y);
        if (basis.empty()) continue;
        StableHom sh = stable_hom(C, projective_ideal(C, E, cf.Cc, Y), cf.Cc, Y);
        Mat M(C.f, sh.dim, (int)basis.size());
        for (size_t r = 0; r < basis.size(); ++r) {
          Mat v = mat_mul(sh.projection,
                          eval_neg_II(T, basis[r], cf.A, Y, cf.delta.v, cf.Cc, 1).v);
          for (int i = 0; i < v.r; ++i) M.set(i, (int)r, v.at(i, 0));
        }
        if (kernel_basis(M).dim() != 0) {
          R.NIIp = false;
          R.failures.push_back("(NII+) fails at Y=" + C.names[y] + ", witness " + cf.id);
        }
      }
    }
  }
  return R;
}

ComparisonResult comparison_images(const ExtriInstance& inst, const Tower& T, int X, int Y) {
  const Category& C = inst.C;
  check(inst.inj_inflation.count(X) == 1 && inst.proj_deflation.count(Y) == 1,
        "comparison_images: missing designated conflation data");
  const Conflation& ic = inst.table[inst.inj_inflation.at(X)];
  const Conflation& pc = inst.table[inst.proj_deflation.at(Y)];
  Obj Xo = obj_indec(C, X), Yo = obj_indec(C, Y), J = ic.Cc, Qo = pc.A;
  Mat us = upper_sharp_at(T, ic.delta, 0, Qo);  // C(X,Q) -> E(J,Q)
  Mat ls = lower_sharp_at(T, pc.delta, 0, J);   // C(J,Y) -> E(J,Q)
  std::vector<Mat> gI, gII;
  for (const auto& phi : neg_basis_I(T, 1, Xo, Yo))
    gI.push_back(mat_mul(us, eval_neg_I(T, phi, Xo, Yo, pc.delta.v, Qo, 1).v));
  for (const auto& psi : neg_basis_II(T, 1, Xo, Yo))
    gII.push_back(mat_mul(ls, eval_neg_II(T, psi, Xo, Yo, ic.delta.v, J, 1).v));
  int amb = bi_layout(T.levels[1], J, Qo).dim;
  ComparisonResult R;
  R.image_I = span_of(gI, amb, C.f);
  R.image_II = span_of(gII, amb, C.f);
  R.equal = subspace_eq(R.image_I, R.image_II);
  return R;
}

AltSumReport alternating_sum_check(const ExtriInstance& inst, const Tower& T,
                                   const ResolutionChain& chain, const Obj& X) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  int L = (int)chain.confs.size();
  check(L <= T.nmax, "alternating_sum_check: tower too shallow");
  std::vector<Obj> Om = {chain.Y};
  std::vector<Obj> P;
  for (int k = 0; k < L; ++k) {
    const Conflation& cf = inst.table[chain.confs[k]];
    check(cf.Cc == Om.back(), "alternating_sum_check: invalid chain");
    P.push_back(cf.B);
    Om.push_back(cf.A);
  }
  P.push_back(Om.back());  // Om^L Y is itself the last projective term
  AltSumReport R;
  for (int k = 0; k <= L; ++k) {
    R.neg_dims.push_back(neg_dim_I(T, k, X, chain.Y));
    R.stable_dims.push_back(stable_hom(C, projective_ideal(C, E, X, Om[k]), X, Om[k]).dim);
    R.proj_dims.push_back(hom_layout(C, X, P[k]).dim);
    int sign = k % 2 == 0 ? 1 : -1;
    R.lhs += sign * R.neg_dims.back();
    R.rhs += sign * (R.stable_dims.back() + R.proj_dims.back());
  }
  R.holds = R.lhs == R.rhs;
  return R;
}

}  // namespace xk
