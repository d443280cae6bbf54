#include "extrikit/relstruct.hpp"

namespace xk {

GammaComplex gamma_complex_I(const Tower& T, const Conflation& conf, int w) {
  const Category& C = *T.C;
  check(w >= 0 && w <= T.nmax, "gamma_complex_I: window exceeds tower depth");
  GammaComplex G;
  G.f = C.f;
  G.w = w;
  G.dims.resize(C.n());
  G.maps.resize(C.n());
  for (int m = 0; m < C.n(); ++m) neg_seq_I(T, conf, -w, w, m, G.dims[m], G.maps[m]);
  return G;
}

GammaComplex gamma_complex_trunc(const Tower& T, const Conflation& conf, int w) {
  GammaComplex G = gamma_complex_I(T, conf, w);
  for (int m = 0; m < (int)G.dims.size(); ++m) {
    for (int p = 0; p < G.positions(); ++p)
      if (-G.w + p / 3 < 0) G.dims[m][p] = 0;
    for (int p = 0; p + 1 < G.positions(); ++p)
      if (G.maps[m][p].r != G.dims[m][p + 1] || G.maps[m][p].c != G.dims[m][p])
        G.maps[m][p] = Mat(G.f, G.dims[m][p + 1], G.dims[m][p]);
  }
  return G;
}

GammaComplex gamma_complex_from(const Field& f, const ConnSeq& seq) {
  check(seq.lo == -seq.hi, "gamma_complex_from: window not symmetric around 0");
  GammaComplex G;
  G.f = f;
  G.w = seq.hi;
  G.dims = seq.dims;
  G.maps = seq.maps;
  for (size_t m = 0; m < G.dims.size(); ++m) {
    check((int)G.dims[m].size() == G.positions(),
          "gamma_complex_from: wrong number of terms");
    check(G.maps[m].size() + 1 == G.dims[m].size(),
          "gamma_complex_from: wrong number of maps");
    for (int p = 0; p + 1 < G.positions(); ++p)
      check(G.maps[m][p].r == G.dims[m][p + 1] && G.maps[m][p].c == G.dims[m][p],
            "gamma_complex_from: map shape mismatch");
  }
  return G;
}

std::vector<std::vector<int>> gamma_cohomology(const GammaComplex& G) {
  std::vector<std::vector<int>> h(G.dims.size());
  for (size_t m = 0; m < G.dims.size(); ++m)
    for (int p = 1; p + 1 < G.positions(); ++p) {
      check(mat_mul(G.maps[m][p], G.maps[m][p - 1]).is_zero(),
            "gamma_cohomology: input is not a complex");
      h[m].push_back(G.dims[m][p] - rank(G.maps[m][p - 1]) - rank(G.maps[m][p]));
    }
  return h;
}

bool gamma_acyclic(const GammaComplex& G) {
  for (auto& row : gamma_cohomology(G))
    for (int v : row)
      if (v) return false;
  return true;
}

WitnessSub acyclic_witness_subfunctor(const ExtriInstance& inst, const Tower& T,
                                      SeqKind kind, int w) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  check(!inst.table.empty(), "acyclic_witness_subfunctor: empty conflation table");
  WitnessSub W;
  W.sub.assign(C.n(), std::vector<Subspace>(C.n()));
  std::vector<std::vector<std::vector<Mat>>> gens(
      C.n(), std::vector<std::vector<Mat>>(C.n()));
  for (const Conflation& cf : inst.table) {
    GammaComplex G = kind == SeqKind::NegI ? gamma_complex_I(T, cf, w)
                                           : gamma_complex_trunc(T, cf, w);
    if (!gamma_acyclic(G)) continue;
    W.generators.push_back(cf.id);
    BiLayout bl = bi_layout(E, cf.Cc, cf.A);
    auto ccp = copies(cf.Cc), acp = copies(cf.A);
    for (size_t ci = 0; ci < ccp.size(); ++ci)
      for (size_t ai = 0; ai < acp.size(); ++ai) {
        int i = ccp[ci].first, j = acp[ai].first;
        Mat v(C.f, E.dim[i][j], 1);
        for (int b = 0; b < E.dim[i][j]; ++b)
          v.set(b, 0, cf.delta.v.at(bl.off[ci][ai] + b, 0));
        if (!v.is_zero()) gens[i][j].push_back(v);
      }
  }
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j)
      W.sub[i][j] = span_of(gens[i][j], E.dim[i][j], C.f);
  /* close under both actions */
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < C.n(); ++i)
      for (int j = 0; j < C.n(); ++j) {
        if (W.sub[i][j].dim() == 0) continue;
        const Mat& bas = W.sub[i][j].basis;
        for (int j2 = 0; j2 < C.n(); ++j2)
          for (int b = 0; b < C.hdim[j][j2]; ++b) {
            Mat img = mat_mul(E.lact[i][j][j2][b], bas);
            if (img.is_zero() || subspace_contains(W.sub[i][j2], img)) continue;
            W.sub[i][j2] = span_of({W.sub[i][j2].basis, img}, E.dim[i][j2], C.f);
            changed = true;
          }
        for (int i2 = 0; i2 < C.n(); ++i2)
          for (int b = 0; b < C.hdim[i2][i]; ++b) {
            Mat img = mat_mul(E.ract[j][i][i2][b], bas);
            if (img.is_zero() || subspace_contains(W.sub[i2][j], img)) continue;
            W.sub[i2][j] = span_of({W.sub[i2][j].basis, img}, E.dim[i2][j], C.f);
            changed = true;
          }
      }
  }
  check(witness_sub_closed(E, W), "acyclic_witness_subfunctor: closure failed");
  return W;
}

bool witness_sub_closed(const Bimod& E, const WitnessSub& W) {
  const Category& C = *E.C;
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) {
      if (W.sub[i][j].dim() == 0) continue;
      for (int j2 = 0; j2 < C.n(); ++j2)
        for (int b = 0; b < C.hdim[j][j2]; ++b)
          if (!subspace_contains(W.sub[i][j2],
                                 mat_mul(E.lact[i][j][j2][b], W.sub[i][j].basis)))
            return false;
      for (int i2 = 0; i2 < C.n(); ++i2)
        for (int b = 0; b < C.hdim[i2][i]; ++b)
          if (!subspace_contains(W.sub[i2][j],
                                 mat_mul(E.ract[j][i][i2][b], W.sub[i][j].basis)))
            return false;
    }
  return true;
}

}  // namespace xk
