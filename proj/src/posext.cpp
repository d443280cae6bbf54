#include "extrikit/posext.hpp"

#include <algorithm>

namespace xk {

int ChainInfo::tuple_index(const std::vector<int>& t) const {
  for (int i = 0; i < (int)tuples.size(); ++i)
    if (tuples[i] == t) return i;
  return -1;
}

static std::vector<int> factor_dims(const Bimod& E, int c, const std::vector<int>& t, int a) {
  std::vector<int> d;
  int prev = c;
  for (int m : t) {
    d.push_back(E.dim[prev][m]);
    prev = m;
  }
  d.push_back(E.dim[prev][a]);
  return d;
}

static Mat unit_col(const Field& f, int d, int i) {
  Mat u(f, d, 1);
  u.at(i, 0) = 1;
  return u;
}

/* Enumerate nonzero chain tuples recursively: every factor must be nonzero. */
static void enum_tuples(const Bimod& E, int prev, int a, int slots_left,
                        std::vector<int>& cur, ChainInfo& info) {
  int N = (int)E.dim.size();
  for (int m = 0; m < N; ++m) {
    if (E.dim[prev][m] == 0) continue;
    cur.push_back(m);
    if (slots_left == 1) {
      if (E.dim[m][a] > 0) info.tuples.push_back(cur);
    } else {
      enum_tuples(E, m, a, slots_left - 1, cur, info);
    }
    cur.pop_back();
  }
}

static ChainInfo build_chain(const Bimod& E, int n, int c, int a) {
  ChainInfo info;
  if (n == 1) {
    if (E.dim[c][a] > 0) info.tuples.push_back({});
  } else {
    std::vector<int> cur;
    enum_tuples(E, c, a, n - 1, cur, info);
  }
  for (auto& t : info.tuples) {
    int d = 1;
    for (int x : factor_dims(E, c, t, a)) d *= x;
    info.tupoff.push_back(info.dim);
    info.tupdim.push_back(d);
    info.dim += d;
  }
  return info;
}

/* Add sgn * (tensor of factor column vectors) at the block of `tuple`. */
static void add_embed(const Field& f, const ChainInfo& info, const std::vector<int>& tuple,
                      const std::vector<Mat>& fac, int sgn, Mat& col) {
  int ti = info.tuple_index(tuple);
  if (ti < 0) return;
  Mat v = fac[0];
  for (size_t i = 1; i < fac.size(); ++i) v = kronecker_tensor(v, fac[i]);
  check(v.r == info.tupdim[ti], "chain embed: factor dims mismatch");
  for (int i = 0; i < v.r; ++i)
    col.set(info.tupoff[ti] + i, 0, col.at(info.tupoff[ti] + i, 0) + Q(sgn) * v.at(i, 0));
}

/* All relation columns for the pair (c,a) at level n >= 2. */
static Mat build_relations(const Category& C, const Bimod& E, int n, int c, int a,
                           const ChainInfo& info) {
  const Field& f = C.f;
  int N = C.n();
  std::vector<Mat> cols;
  int slots = n - 1;
  /* reduced tuple: values for every slot except k */
  std::vector<int> t(slots, 0);
  for (int k = 0; k < slots; ++k) {
    std::vector<int> free_pos;
    for (int j = 0; j < slots; ++j)
      if (j != k) free_pos.push_back(j);
    std::vector<int> od(free_pos.size(), 0);
    while (true) {
      for (size_t j = 0; j < free_pos.size(); ++j) t[free_pos[j]] = od[j];
      int prev = (k == 0) ? c : t[k - 1];
      int next = (k == slots - 1) ? a : t[k + 1];
      /* shared factors (everything not touching slot k) must be nonzero */
      bool ok = true;
      std::vector<int> shared_idx, shared_dim;  // factor positions 1..n except k+1,k+2
      for (int i = 1; i <= n && ok; ++i) {
        if (i == k + 1 || i == k + 2) continue;
        int src = (i == 1) ? c : t[i - 2];
        int tgt = (i == n) ? a : t[i - 1];
        int d = E.dim[src][tgt];
        if (d == 0) ok = false;
        shared_idx.push_back(i);
        shared_dim.push_back(d);
      }
      if (ok) {
        for (int m = 0; m < N; ++m) {
          if (E.dim[prev][m] == 0) continue;
          for (int mp = 0; mp < N; ++mp) {
            if (E.dim[mp][next] == 0 || C.hdim[m][mp] == 0) continue;
            int dl = E.dim[prev][m], dk = E.dim[mp][next];
            std::vector<int> ob(shared_dim.size(), 0);
            while (true) {
              for (int b = 0; b < C.hdim[m][mp]; ++b) {
                const Mat& push = E.lact[prev][m][mp][b];   // E(prev,m)->E(prev,mp)
                const Mat& pull = E.ract[next][mp][m][b];   // E(mp,next)->E(m,next)
                for (int l0 = 0; l0 < dl; ++l0)
                  for (int k0 = 0; k0 < dk; ++k0) {
                    Mat col(f, info.dim, 1);
                    auto fill = [&](int slotval, const Mat& fkp1, const Mat& fkp2, int sgn) {
                      std::vector<int> tup = t;
                      tup[k] = slotval;
                      std::vector<Mat> fac(n);
                      size_t si = 0;
                      for (int i = 1; i <= n; ++i) {
                        if (i == k + 1) fac[i - 1] = fkp1;
                        else if (i == k + 2) fac[i - 1] = fkp2;
                        else {
                          fac[i - 1] = unit_col(f, shared_dim[si], ob[si]);
                          ++si;
                        }
                      }
                      add_embed(f, info, tup, fac, sgn, col);
                    };
                    /* (b_* lambda, kappa) at slot value mp ... */
                    Mat bl(f, push.r, 1);
                    for (int i = 0; i < push.r; ++i) bl.set(i, 0, push.at(i, l0));
                    fill(mp, bl, unit_col(f, dk, k0), 1);
                    /* ... minus (lambda, b^* kappa) at slot value m */
                    Mat bk(f, pull.r, 1);
                    for (int i = 0; i < pull.r; ++i) bk.set(i, 0, pull.at(i, k0));
                    fill(m, unit_col(f, dl, l0), bk, -1);
                    if (!col.is_zero()) cols.push_back(col);
                  }
              }
              /* advance shared-basis odometer */
              size_t p = 0;
              while (p < ob.size() && ++ob[p] == shared_dim[p]) ob[p++] = 0;
              if (p == ob.size()) break;
              if (ob.empty()) break;
            }
          }
        }
      }
      size_t p = 0;
      while (p < od.size() && ++od[p] == N) od[p++] = 0;
      if (p == od.size()) break;
      if (od.empty()) break;
    }
  }
  Mat R(f, info.dim, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j)
    for (int i = 0; i < info.dim; ++i) R.set(i, j, cols[j].at(i, 0));
  return R;
}

/* Big matrix of the action on chains (before quotient): push along b: a->a2
 * on the last factor. */
static Mat chain_push(const Field& f, const Bimod& E, int n, int c, int a, int a2, int b,
                      const ChainInfo& src, const ChainInfo& dst) {
  Mat big(f, dst.dim, src.dim);
  for (int ti = 0; ti < (int)src.tuples.size(); ++ti) {
    const auto& t = src.tuples[ti];
    int last = (n == 1) ? c : t.back();
    const Mat& M = E.lact[last][a][a2][b];  // E(last,a)->E(last,a2)
    if (M.r == 0) continue;
    int dj = dst.tuple_index(t);
    if (dj < 0) continue;
    int pre = src.tupdim[ti] / M.c;
    for (int p = 0; p < pre; ++p)
      for (int i = 0; i < M.r; ++i)
        for (int j = 0; j < M.c; ++j)
          big.set(dst.tupoff[dj] + p * M.r + i, src.tupoff[ti] + p * M.c + j, M.at(i, j));
  }
  return big;
}

/* Pull along b: c2->c on the first factor. */
static Mat chain_pull(const Field& f, const Bimod& E, int n, int c, int c2, int a, int b,
                      const ChainInfo& src, const ChainInfo& dst) {
  Mat big(f, dst.dim, src.dim);
  for (int ti = 0; ti < (int)src.tuples.size(); ++ti) {
    const auto& t = src.tuples[ti];
    int first = (n == 1) ? a : t.front();
    const Mat& M = E.ract[first][c][c2][b];  // E(c,first)->E(c2,first)
    if (M.r == 0) continue;
    int dj = dst.tuple_index(t);
    if (dj < 0) continue;
    int post = src.tupdim[ti] / M.c;
    for (int i = 0; i < M.r; ++i)
      for (int j = 0; j < M.c; ++j)
        for (int p = 0; p < post; ++p)
          big.set(dst.tupoff[dj] + i * post + p, src.tupoff[ti] + j * post + p, M.at(i, j));
  }
  return big;
}

Tower build_tower(const Category& C, const Bimod& E, int nmax) {
  check(nmax >= 1, "build_tower: nmax must be >= 1");
  int N = C.n();
  Tower T;
  T.C = &C;
  T.nmax = nmax;
  T.E0 = hom_bimod(C);
  T.levels.resize(nmax + 1);
  T.levels[0] = T.E0;
  T.levels[1] = E;
  T.chains.resize(nmax + 1);
  T.proj.resize(nmax + 1);
  T.sect.resize(nmax + 1);
  T.rels.resize(nmax + 1);
  for (int n = 1; n <= nmax; ++n) {
    T.chains[n].assign(N, std::vector<ChainInfo>(N));
    T.proj[n].assign(N, std::vector<Mat>(N));
    T.sect[n].assign(N, std::vector<Mat>(N));
    T.rels[n].assign(N, std::vector<Mat>(N));
    for (int c = 0; c < N; ++c)
      for (int a = 0; a < N; ++a) {
        ChainInfo info = build_chain(E, n, c, a);
        if (n == 1) {
          T.proj[n][c][a] = Mat::id(C.f, info.dim);
          T.sect[n][c][a] = Mat::id(C.f, info.dim);
          T.rels[n][c][a] = Mat(C.f, info.dim, 0);
        } else {
          Mat R = build_relations(C, E, n, c, a, info);
          T.rels[n][c][a] = R;
          if (info.dim == 0 || R.c == 0) {
            T.proj[n][c][a] = Mat::id(C.f, info.dim);
            T.sect[n][c][a] = Mat::id(C.f, info.dim);
          } else {
            Cokernel ck = cokernel(R);
            T.proj[n][c][a] = ck.projection;
            T.sect[n][c][a] = ck.section;
          }
        }
        T.chains[n][c][a] = info;
      }
    if (n >= 2) {
      Bimod L;
      L.init(C);
      for (int c = 0; c < N; ++c)
        for (int a = 0; a < N; ++a) L.dim[c][a] = T.proj[n][c][a].r;
      L.init_zero_maps();
      for (int c = 0; c < N; ++c)
        for (int a = 0; a < N; ++a) {
          for (int a2 = 0; a2 < N; ++a2)
            for (int b = 0; b < C.hdim[a][a2]; ++b) {
              Mat big = chain_push(C.f, E, n, c, a, a2, b, T.chains[n][c][a], T.chains[n][c][a2]);
              L.lact[c][a][a2][b] = mat_mul(T.proj[n][c][a2], mat_mul(big, T.sect[n][c][a]));
            }
          for (int c2 = 0; c2 < N; ++c2)
            for (int b = 0; b < C.hdim[c2][c]; ++b) {
              Mat big = chain_pull(C.f, E, n, c, c2, a, b, T.chains[n][c][a], T.chains[n][c2][a]);
              L.ract[a][c][c2][b] = mat_mul(T.proj[n][c2][a], mat_mul(big, T.sect[n][c][a]));
            }
        }
      T.levels[n] = L;
    }
  }
  return T;
}

void tower_audit(const Tower& T) {
  const Category& C = *T.C;
  const Bimod& E = T.levels[1];
  int N = C.n();
  for (int n = 2; n <= T.nmax; ++n) {
    T.levels[n].validate();
    for (int c = 0; c < N; ++c)
      for (int a = 0; a < N; ++a) {
        const Mat& R = T.rels[n][c][a];
        check(mat_mul(T.proj[n][c][a], R).is_zero(), "tower audit: relation survives quotient");
        /* actions take relations to relations */
        for (int a2 = 0; a2 < N; ++a2)
          for (int b = 0; b < C.hdim[a][a2]; ++b) {
            Mat big = chain_push(C.f, E, n, c, a, a2, b, T.chains[n][c][a], T.chains[n][c][a2]);
            check(mat_mul(T.proj[n][c][a2], mat_mul(big, R)).is_zero(),
                  "tower audit: pushforward of a relation is not a relation");
          }
        for (int c2 = 0; c2 < N; ++c2)
          for (int b = 0; b < C.hdim[c2][c]; ++b) {
            Mat big = chain_pull(C.f, E, n, c, c2, a, b, T.chains[n][c][a], T.chains[n][c2][a]);
            check(mat_mul(T.proj[n][c2][a], mat_mul(big, R)).is_zero(),
                  "tower audit: pullback of a relation is not a relation");
          }
      }
  }
}

/* Append rho in E(m,a) to a level-n class at the indec triple (x,m,a). */
static Mat append_block(const Tower& T, int n, int x, int m, int a, const Mat& lamq,
                        const Mat& rhov) {
  const Category& C = *T.C;
  const Bimod& E = T.levels[1];
  const Field& f = C.f;
  if (n == 0) {
    Mat out(f, T.proj[1][x][a].r, 1);
    for (int b = 0; b < C.hdim[x][m]; ++b) {
      if (lamq.at(b, 0) == 0) continue;
      Mat pulled = mat_mul(E.ract[a][m][x][b], rhov);  // b^* on E(m,a)
      out = mat_add(out, mat_scale(lamq.at(b, 0), pulled));
    }
    return out;
  }
  const ChainInfo& src = T.chains[n][x][m];
  const ChainInfo& dst = T.chains[n + 1][x][a];
  Mat lift = mat_mul(T.sect[n][x][m], lamq);
  Mat out(f, dst.dim, 1);
  int e = E.dim[m][a];
  if (e > 0) {
    for (int ti = 0; ti < (int)src.tuples.size(); ++ti) {
      std::vector<int> nt = src.tuples[ti];
      nt.push_back(m);
      int dj = dst.tuple_index(nt);
      if (dj < 0) continue;
      for (int i = 0; i < src.tupdim[ti]; ++i)
        for (int j = 0; j < e; ++j)
          out.set(dst.tupoff[dj] + i * e + j,
                  0,
                  out.at(dst.tupoff[dj] + i * e + j, 0) +
                      lift.at(src.tupoff[ti] + i, 0) * rhov.at(j, 0));
    }
  }
  return mat_mul(T.proj[n + 1][x][a], out);
}

/* Prepend rho in E(c,a) to a level-n class at the indec triple (c,a,y). */
static Mat prepend_block(const Tower& T, int n, int c, int a, int y, const Mat& lamq,
                         const Mat& rhov) {
  const Category& C = *T.C;
  const Bimod& E = T.levels[1];
  const Field& f = C.f;
  if (n == 0) {
    Mat out(f, T.proj[1][c][y].r, 1);
    for (int b = 0; b < C.hdim[a][y]; ++b) {
      if (lamq.at(b, 0) == 0) continue;
      Mat pushed = mat_mul(E.lact[c][a][y][b], rhov);  // b_* on E(c,a)
      out = mat_add(out, mat_scale(lamq.at(b, 0), pushed));
    }
    return out;
  }
  const ChainInfo& src = T.chains[n][a][y];
  const ChainInfo& dst = T.chains[n + 1][c][y];
  Mat lift = mat_mul(T.sect[n][a][y], lamq);
  Mat out(f, dst.dim, 1);
  int e = E.dim[c][a];
  if (e > 0) {
    for (int ti = 0; ti < (int)src.tuples.size(); ++ti) {
      std::vector<int> nt;
      nt.push_back(a);
      for (int v : src.tuples[ti]) nt.push_back(v);
      int dj = dst.tuple_index(nt);
      if (dj < 0) continue;
      for (int j = 0; j < e; ++j)
        for (int i = 0; i < src.tupdim[ti]; ++i)
          out.set(dst.tupoff[dj] + j * src.tupdim[ti] + i,
                  0,
                  out.at(dst.tupoff[dj] + j * src.tupdim[ti] + i, 0) +
                      rhov.at(j, 0) * lift.at(src.tupoff[ti] + i, 0));
    }
  }
  return mat_mul(T.proj[n + 1][c][y], out);
}

static Mat block_of(const Mat& v, int off, int d) {
  Mat b(v.f, d, 1);
  for (int i = 0; i < d; ++i) b.set(i, 0, v.at(off + i, 0));
  return b;
}

Mat class_of(const Tower& T, const ExtElem& rho, const Obj& X, const Mat& lambda, int n) {
  const Category& C = *T.C;
  const Bimod& E = T.levels[1];
  check(n + 1 <= T.nmax, "class_of: tower too shallow");
  const Bimod& Ln = T.levels[n];
  const Bimod& Lt = T.levels[n + 1];
  BiLayout lam = (n == 0) ? BiLayout{} : bi_layout(Ln, X, rho.Cterm);
  HomLayout hl;
  if (n == 0) hl = hom_layout(C, X, rho.Cterm);
  BiLayout rl = bi_layout(E, rho.Cterm, rho.Aterm);
  BiLayout out_l = bi_layout(Lt, X, rho.Aterm);
  Mat out(C.f, out_l.dim, 1);
  auto xc = copies(X), mc = copies(rho.Cterm), ac = copies(rho.Aterm);
  for (int xi = 0; xi < (int)xc.size(); ++xi)
    for (int mj = 0; mj < (int)mc.size(); ++mj) {
      int x = xc[xi].first, m = mc[mj].first;
      int sd = (n == 0) ? C.hdim[x][m] : Ln.dim[x][m];
      if (sd == 0) continue;
      int soff = (n == 0) ? hl.off[xi][mj] : lam.off[xi][mj];
      Mat lamb = block_of(lambda, soff, sd);
      if (lamb.is_zero()) continue;
      for (int ak = 0; ak < (int)ac.size(); ++ak) {
        int a = ac[ak].first;
        if (E.dim[m][a] == 0) continue;
        Mat rhob = block_of(rho.v, rl.off[mj][ak], E.dim[m][a]);
        if (rhob.is_zero()) continue;
        Mat res = append_block(T, n, x, m, a, lamb, rhob);
        for (int i = 0; i < res.r; ++i)
          out.set(out_l.off[xi][ak] + i, 0, out.at(out_l.off[xi][ak] + i, 0) + res.at(i, 0));
      }
    }
  return out;
}

Mat class_of_pre(const Tower& T, const Obj& Y, const Mat& lambda, const ExtElem& rho, int n) {
  const Category& C = *T.C;
  const Bimod& E = T.levels[1];
  check(n + 1 <= T.nmax, "class_of_pre: tower too shallow");
  const Bimod& Ln = T.levels[n];
  const Bimod& Lt = T.levels[n + 1];
  BiLayout lam = (n == 0) ? BiLayout{} : bi_layout(Ln, rho.Aterm, Y);
  HomLayout hl;
  if (n == 0) hl = hom_layout(C, rho.Aterm, Y);
  BiLayout rl = bi_layout(E, rho.Cterm, rho.Aterm);
  BiLayout out_l = bi_layout(Lt, rho.Cterm, Y);
  Mat out(C.f, out_l.dim, 1);
  auto cc = copies(rho.Cterm), ac = copies(rho.Aterm), yc = copies(Y);
  for (int ai = 0; ai < (int)ac.size(); ++ai)
    for (int yj = 0; yj < (int)yc.size(); ++yj) {
      int a = ac[ai].first, y = yc[yj].first;
      int sd = (n == 0) ? C.hdim[a][y] : Ln.dim[a][y];
      if (sd == 0) continue;
      int soff = (n == 0) ? hl.off[ai][yj] : lam.off[ai][yj];
      Mat lamb = block_of(lambda, soff, sd);
      if (lamb.is_zero()) continue;
      for (int ci = 0; ci < (int)cc.size(); ++ci) {
        int c = cc[ci].first;
        if (E.dim[c][a] == 0) continue;
        Mat rhob = block_of(rho.v, rl.off[ci][ai], E.dim[c][a]);
        if (rhob.is_zero()) continue;
        Mat res = prepend_block(T, n, c, a, y, lamb, rhob);
        for (int i = 0; i < res.r; ++i)
          out.set(out_l.off[ci][yj] + i, 0, out.at(out_l.off[ci][yj] + i, 0) + res.at(i, 0));
      }
    }
  return out;
}

Mat lower_sharp_at(const Tower& T, const ExtElem& delta, int n, const Obj& X) {
  const Category& C = *T.C;
  int sd = (n == 0) ? hom_layout(C, X, delta.Cterm).dim
                    : bi_layout(T.levels[n], X, delta.Cterm).dim;
  int td = bi_layout(T.levels[n + 1], X, delta.Aterm).dim;
  Mat M(C.f, td, sd);
  for (int j = 0; j < sd; ++j) {
    Mat e(C.f, sd, 1);
    e.at(j, 0) = 1;
    Mat col = class_of(T, delta, X, e, n);
    for (int i = 0; i < td; ++i) M.set(i, j, col.at(i, 0));
  }
  return M;
}

Mat upper_sharp_at(const Tower& T, const ExtElem& delta, int n, const Obj& Y) {
  const Category& C = *T.C;
  int sd = (n == 0) ? hom_layout(C, delta.Aterm, Y).dim
                    : bi_layout(T.levels[n], delta.Aterm, Y).dim;
  int td = bi_layout(T.levels[n + 1], delta.Cterm, Y).dim;
  Mat M(C.f, td, sd);
  for (int j = 0; j < sd; ++j) {
    Mat e(C.f, sd, 1);
    e.at(j, 0) = 1;
    Mat col = class_of_pre(T, Y, e, delta, n);
    for (int i = 0; i < td; ++i) M.set(i, j, col.at(i, 0));
  }
  return M;
}

ModMor delta_lower_sharp(const Tower& T, const ExtElem& delta, int n) {
  const Category& C = *T.C;
  CMod S = (n == 0) ? hom_contra(C, delta.Cterm) : contra_slice(T.levels[n], delta.Cterm);
  CMod Tg = contra_slice(T.levels[n + 1], delta.Aterm);
  ModMor phi = mod_zero_mor(S, Tg);
  for (int m = 0; m < C.n(); ++m) phi.comp[m] = lower_sharp_at(T, delta, n, obj_indec(C, m));
  return phi;
}

ModMor delta_upper_sharp(const Tower& T, const ExtElem& delta, int n) {
  const Category& C = *T.C;
  CMod S = (n == 0) ? hom_cov(C, delta.Aterm) : cov_slice(T.levels[n], delta.Aterm);
  CMod Tg = cov_slice(T.levels[n + 1], delta.Cterm);
  ModMor phi = mod_zero_mor(S, Tg);
  for (int m = 0; m < C.n(); ++m) phi.comp[m] = upper_sharp_at(T, delta, n, obj_indec(C, m));
  return phi;
}

bool has_trivialization(const Category& C, const Conflation& conf, const CMod& F,
                        const Mat& lambda) {
  (void)C;
  Mat Fq = mod_map(F, conf.y);  // F(B) -> F(Cc)
  return solve(Fq, lambda).has_value();
}

bool verify_dominant(const Category& C, const Bimod& E, const Conflation& conf) {
  for (int y = 0; y < C.n(); ++y) {
    Obj Y = obj_indec(C, y);
    HomLayout hl = hom_layout(C, conf.A, Y);
    int td = bi_layout(E, conf.Cc, Y).dim;
    if (td == 0) continue;
    Mat M(C.f, td, hl.dim);
    int col = 0;
    for (int si = 0; si < (int)hl.sc.size(); ++si)
      for (int b = 0; b < C.hdim[hl.sc[si].first][y]; ++b, ++col) {
        Mor h = mor_basis(C, conf.A, Y, si, 0, b);
        Mat v = mat_mul(bi_push(E, h, conf.Cc), conf.delta.v);
        for (int i = 0; i < td; ++i) M.set(i, col, v.at(i, 0));
      }
    if (rank(M) != td) return false;
  }
  return true;
}

bool verify_codominant(const Category& C, const Bimod& E, const Conflation& conf) {
  for (int x = 0; x < C.n(); ++x) {
    Obj X = obj_indec(C, x);
    HomLayout hl = hom_layout(C, X, conf.Cc);
    int td = bi_layout(E, X, conf.A).dim;
    if (td == 0) continue;
    Mat M(C.f, td, hl.dim);
    int col = 0;
    for (int ti = 0; ti < (int)hl.tc.size(); ++ti)
      for (int b = 0; b < C.hdim[x][hl.tc[ti].first]; ++b, ++col) {
        Mor h = mor_basis(C, X, conf.Cc, 0, ti, b);
        Mat v = mat_mul(bi_pull(E, h, conf.A), conf.delta.v);
        for (int i = 0; i < td; ++i) M.set(i, col, v.at(i, 0));
      }
    if (rank(M) != td) return false;
  }
  return true;
}

ExtElem find_dominant_extension(const Category& C, const Bimod& E, int c) {
  Obj F = obj_zero(C);
  for (int x = 0; x < C.n(); ++x) F.m[x] = E.dim[c][x];
  Obj Cc = obj_indec(C, c);
  BiLayout bl = bi_layout(E, Cc, F);
  Mat v(C.f, bl.dim, 1);
  auto fc = copies(F);
  for (int j = 0; j < (int)fc.size(); ++j) v.at(bl.off[0][j] + fc[j].second, 0) = 1;
  return ExtElem{Cc, F, v};
}

static void exactness(const std::vector<Mat>& maps, const std::vector<int>& dims,
                      const std::string& tag, SeqCheck& out) {
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    const Mat& P = maps[i];
    const Mat& Qm = maps[i + 1];
    if (!mat_mul(Qm, P).is_zero()) {
      out.exact = false;
      out.failures.push_back(tag + ": composite nonzero at node " + std::to_string(i + 1));
    }
    if (rank(P) + rank(Qm) != dims[i + 1]) {
      out.exact = false;
      out.failures.push_back(tag + ": homology nonzero at node " + std::to_string(i + 1));
    }
  }
}

SeqCheck les_check(const Tower& T, const Bimod& E, const Conflation& conf) {
  const Category& C = *T.C;
  SeqCheck out;
  for (int w = 0; w < C.n(); ++w) {
    Obj W = obj_indec(C, w);
    /* covariant: C(W,A)->C(W,B)->C(W,Cc)->E(W,A)->...->E^{nmax}(W,Cc) */
    std::vector<Mat> maps;
    std::vector<int> dims;
    dims.push_back(hom_layout(C, W, conf.A).dim);
    maps.push_back(post_matrix(C, conf.x, W));
    dims.push_back(hom_layout(C, W, conf.B).dim);
    maps.push_back(post_matrix(C, conf.y, W));
    dims.push_back(hom_layout(C, W, conf.Cc).dim);
    for (int n = 0; n + 1 <= T.nmax; ++n) {
      maps.push_back(lower_sharp_at(T, conf.delta, n, W));
      dims.push_back(bi_layout(T.levels[n + 1], W, conf.A).dim);
      maps.push_back(bi_push(T.levels[n + 1], conf.x, W));
      dims.push_back(bi_layout(T.levels[n + 1], W, conf.B).dim);
      maps.push_back(bi_push(T.levels[n + 1], conf.y, W));
      dims.push_back(bi_layout(T.levels[n + 1], W, conf.Cc).dim);
    }
    exactness(maps, dims, "cov at " + C.names[w] + " [" + conf.id + "]", out);

    /* contravariant: C(Cc,W)->C(B,W)->C(A,W)->E(Cc,W)->... */
    maps.clear();
    dims.clear();
    dims.push_back(hom_layout(C, conf.Cc, W).dim);
    maps.push_back(pre_matrix(C, conf.y, W));
    dims.push_back(hom_layout(C, conf.B, W).dim);
    maps.push_back(pre_matrix(C, conf.x, W));
    dims.push_back(hom_layout(C, conf.A, W).dim);
    for (int n = 0; n + 1 <= T.nmax; ++n) {
      maps.push_back(upper_sharp_at(T, conf.delta, n, W));
      dims.push_back(bi_layout(T.levels[n + 1], conf.Cc, W).dim);
      maps.push_back(bi_pull(T.levels[n + 1], conf.y, W));
      dims.push_back(bi_layout(T.levels[n + 1], conf.B, W).dim);
      maps.push_back(bi_pull(T.levels[n + 1], conf.x, W));
      dims.push_back(bi_layout(T.levels[n + 1], conf.A, W).dim);
    }
    exactness(maps, dims, "contra at " + C.names[w] + " [" + conf.id + "]", out);
  }
  return out;
}

GlDim pos_gldim(const Tower& T) {
  GlDim g;
  if (!T.levels[T.nmax].is_zero()) {
    g.bounded = false;
    g.value = T.nmax;
    return g;
  }
  g.value = 0;
  for (int n = 1; n <= T.nmax; ++n)
    if (!T.levels[n].is_zero()) g.value = n;
  return g;
}

/* ------------------------- satellites ------------------------- */

static CMod zero_cmod(const Category& C) {
  CMod z;
  z.init(C, true);
  z.init_zero_maps();
  return z;
}

static CMod assemble(const Category& C, const SatTower::Level& lev, const Obj& X) {
  CMod acc = zero_cmod(C);
  bool first = true;
  for (auto [i, k] : copies(X)) {
    (void)k;
    acc = first ? lev.mod[i] : mod_dsum(acc, lev.mod[i]);
    first = false;
  }
  return acc;
}

/* S(f): S(tgt f) -> S(src f), assembled from the indec action blocks. */
static ModMor assemble_map(const Category& C, const SatTower::Level& lev, const Mor& f) {
  CMod SY = assemble(C, lev, f.tgt), SX = assemble(C, lev, f.src);
  ModMor phi = mod_zero_mor(SY, SX);
  auto xc = copies(f.src), yc = copies(f.tgt);
  for (int m = 0; m < C.n(); ++m) {
    Mat M(C.f, SX.dim[m], SY.dim[m]);
    int offx = 0;
    for (int xi = 0; xi < (int)xc.size(); ++xi) {
      int i = xc[xi].first;
      int offy = 0;
      for (int yj = 0; yj < (int)yc.size(); ++yj) {
        int j = yc[yj].first;
        Mat cf = mor_block(C, f, xi, yj);
        for (int b = 0; b < C.hdim[i][j]; ++b) {
          if (cf.at(b, 0) == 0) continue;
          const Mat& A = lev.act[i][j][b].comp[m];
          for (int r = 0; r < A.r; ++r)
            for (int s = 0; s < A.c; ++s)
              M.set(offx + r, offy + s, M.at(offx + r, offy + s) + cf.at(b, 0) * A.at(r, s));
        }
        offy += lev.mod[j].dim[m];
      }
      offx += lev.mod[i].dim[m];
    }
    phi.comp[m] = M;
  }
  return phi;
}

SatTower satellite_tower(const Category& C, const Bimod& E,
                         const std::vector<Conflation>& dom, int nmax) {
  int N = C.n();
  check((int)dom.size() == N, "satellite_tower: need one designated conflation per indec");
  SatTower S;
  S.lev.resize(nmax + 1);
  /* level 0: representables */
  auto& L0 = S.lev[0];
  L0.mod.resize(N);
  L0.act.assign(N, std::vector<std::vector<ModMor>>(N));
  for (int c = 0; c < N; ++c) L0.mod[c] = hom_cov(C, obj_indec(C, c));
  for (int c = 0; c < N; ++c)
    for (int c2 = 0; c2 < N; ++c2)
      for (int b = 0; b < C.hdim[c][c2]; ++b) {
        Mor bm = mor_basis(C, obj_indec(C, c), obj_indec(C, c2), 0, 0, b);
        ModMor phi = mod_zero_mor(L0.mod[c2], L0.mod[c]);
        for (int m = 0; m < N; ++m) phi.comp[m] = pre_matrix(C, bm, obj_indec(C, m));
        L0.act[c][c2].push_back(phi);
      }
  for (int n = 1; n <= nmax; ++n) {
    auto& P = S.lev[n - 1];
    auto& L = S.lev[n];
    L.mod.resize(N);
    L.act.assign(N, std::vector<std::vector<ModMor>>(N));
    std::vector<SubquotientMod> cks(N);
    for (int c = 0; c < N; ++c) {
      const Conflation& cf = dom[c];
      check(cf.Cc == obj_indec(C, c), "satellite_tower: conflation must end at its indec");
      ModMor phi = assemble_map(C, P, cf.x);  // S^{n-1}(G,-) -> S^{n-1}(F,-)
      cks[c] = mod_cokernel(phi);
      L.mod[c] = cks[c].mod;
    }
    for (int c = 0; c < N; ++c)
      for (int c2 = 0; c2 < N; ++c2)
        for (int b = 0; b < C.hdim[c][c2]; ++b) {
          /* lift b: c->c2 to a: F_c -> F_c2 with a_* theta_c = b^* theta_c2 */
          Mor bm = mor_basis(C, obj_indec(C, c), obj_indec(C, c2), 0, 0, b);
          const Obj& Fc = dom[c].A;
          const Obj& Fc2 = dom[c2].A;
          HomLayout hl = hom_layout(C, Fc, Fc2);
          Mat lhs(C.f, bi_layout(E, obj_indec(C, c), Fc2).dim, hl.dim);
          for (int j = 0; j < hl.dim; ++j) {
            Mor aj{Fc, Fc2, Mat(C.f, hl.dim, 1)};
            aj.v.at(j, 0) = 1;
            Mat col = mat_mul(bi_push(E, aj, obj_indec(C, c)), dom[c].delta.v);
            for (int i = 0; i < col.r; ++i) lhs.set(i, j, col.at(i, 0));
          }
          Mat rhs = mat_mul(bi_pull(E, bm, Fc2), dom[c2].delta.v);
          auto sol = solve(lhs, rhs);
          check(sol.has_value(), "satellite_tower: designated conflation is not dominant");
          Mor a{Fc, Fc2, sol->particular};
          ModMor Sa = assemble_map(C, P, a);  // S^{n-1}(F_c2,-) -> S^{n-1}(F_c,-)
          ModMor phi = mod_zero_mor(L.mod[c2], L.mod[c]);
          for (int m = 0; m < N; ++m)
            phi.comp[m] = mat_mul(cks[c].incl_or_proj.comp[m],
                                  mat_mul(Sa.comp[m], cks[c2].section[m]));
          L.act[c][c2].push_back(phi);
        }
  }
  return S;
}

int sat_dim(const SatTower& S, int n, int c, int a) { return S.lev[n].mod[c].dim[a]; }

}  // namespace xk
