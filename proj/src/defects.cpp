#include "extrikit/defects.hpp"

namespace xk {

namespace {

int copy_pos(const Obj& X, int p, int u) {
  int pos = 0;
  for (int q = 0; q < p; ++q) pos += X.m[q];
  return pos + u;
}

/* Matrix of g |-> g^* delta: C(m,Cterm) -> E(m,Aterm). */
Mat delta_sharp_at(const Category& C, const Bimod& E, const ExtElem& d, int m) {
  Obj M = obj_indec(C, m);
  HomLayout hl = hom_layout(C, M, d.Cterm);
  Mat out(C.f, bi_layout(E, M, d.Aterm).dim, hl.dim);
  for (int k = 0; k < hl.dim; ++k) {
    Mor g = mor_zero(C, M, d.Cterm);
    g.v.set(k, 0, Q(1));
    Mat col = mat_mul(bi_pull(E, g, d.Aterm), d.v);
    for (int i = 0; i < out.r; ++i) out.set(i, k, col.at(i, 0));
  }
  return out;
}

}  // namespace

Defect defect_module(const Category& C, const Bimod& E, const ExtElem& delta) {
  Defect D;
  D.Cterm = delta.Cterm;
  D.Aterm = delta.Aterm;
  D.mod.init(C, false);
  D.p.resize(C.n());
  D.incl.resize(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Mat M = delta_sharp_at(C, E, delta, m);
    Subspace im = image_basis(M);
    D.incl[m] = im.basis;
    D.p[m] = coords_in(D.incl[m], M);
    D.mod.dim[m] = im.dim();
  }
  D.mod.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        Mor bm = mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b);
        D.mod.act[m][m2][b] =
            coords_in(D.incl[m], mat_mul(bi_pull(E, bm, delta.Aterm), D.incl[m2]));
      }
  D.mod.validate();
  return D;
}

ModMor defect_eta(const Category& C, const Bimod& E, const Defect& D, const ExtElem& delta,
                  const Defect& R, const ExtElem& rho, const Mor& a, const Mor& c) {
  check(mat_mul(bi_push(E, a, delta.Cterm), delta.v) ==
            mat_mul(bi_pull(E, c, rho.Aterm), rho.v),
        "defect_eta: (a,c) is not a morphism of extensions");
  ModMor eta{D.mod, R.mod, {}};
  eta.comp.resize(C.n());
  for (int m = 0; m < C.n(); ++m)
    eta.comp[m] = coords_in(R.incl[m],
                            mat_mul(bi_push(E, a, obj_indec(C, m)), D.incl[m]));
  check(is_natural(eta), "defect_eta: induced map is not natural");
  return eta;
}

namespace {

/* Every nat map P -> target factors uniquely through the pointwise epi
 * e[m]: P(m) -> Qm(m). */
bool factor_check(const CMod& P, const std::vector<Mat>& e, const CMod& Qm,
                  const CMod& target) {
  const Category& C = *P.C;
  for (const ModMor& phi : nat_space(P, target)) {
    ModMor eta{Qm, target, {}};
    eta.comp.resize(C.n());
    for (int m = 0; m < C.n(); ++m) {
      auto sol = solve(transpose(e[m]), transpose(phi.comp[m]));
      if (!sol || sol->kernel.dim() != 0) return false;
      eta.comp[m] = transpose(sol->particular);
    }
    if (!is_natural(eta)) return false;
  }
  return true;
}

}  // namespace

bool reflection_check(const Category& C, const Defect& Th, const Obj& Cobj,
                      const Defect& sample) {
  check(Th.Cterm == Cobj, "reflection_check: defect does not present C(-,Cobj)");
  return factor_check(hom_contra(C, Cobj), Th.p, Th.mod, sample.mod);
}

bool stable_yoneda_check(const Category& C, const Bimod& E, const Defect& Th) {
  for (int m = 0; m < C.n(); ++m) {
    Obj M = obj_indec(C, m);
    int expect = hom_layout(C, M, Th.Cterm).dim -
                 projective_ideal(C, E, M, Th.Cterm).dim();
    if (Th.mod.dim[m] != expect) return false;
  }
  return true;
}

Conflation dominant_for(const ExtriInstance& inst, const Obj& O) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  auto ocp = copies(O);
  std::vector<const Conflation*> part;
  for (auto& pr : ocp) part.push_back(&inst.table[inst.designated_dominant.at(pr.first)]);
  Obj A = obj_zero(C), B = obj_zero(C);
  std::vector<Obj> apre, bpre;  // multiplicity offsets of each summand
  for (auto* pc : part) {
    apre.push_back(A);
    bpre.push_back(B);
    for (int q = 0; q < C.n(); ++q) {
      A.m[q] += pc->A.m[q];
      B.m[q] += pc->B.m[q];
    }
  }
  Mor x = mor_zero(C, A, B), y = mor_zero(C, B, O);
  HomLayout hx = hom_layout(C, A, B), hy = hom_layout(C, B, O);
  BiLayout bl = bi_layout(E, O, A);
  Mat dv(C.f, bl.dim, 1);
  for (size_t j = 0; j < part.size(); ++j) {
    const Conflation& pc = *part[j];
    auto acp = copies(pc.A), bcp = copies(pc.B);
    HomLayout hpx = hom_layout(C, pc.A, pc.B);
    for (size_t si = 0; si < acp.size(); ++si)
      for (size_t ti = 0; ti < bcp.size(); ++ti) {
        int gs = copy_pos(A, acp[si].first, apre[j].m[acp[si].first] + acp[si].second);
        int gt = copy_pos(B, bcp[ti].first, bpre[j].m[bcp[ti].first] + bcp[ti].second);
        for (int b = 0; b < C.hdim[acp[si].first][bcp[ti].first]; ++b)
          x.v.set(hx.off[gs][gt] + b, 0, pc.x.v.at(hpx.off[si][ti] + b, 0));
      }
    HomLayout hpy = hom_layout(C, pc.B, pc.Cc);
    for (size_t si = 0; si < bcp.size(); ++si) {
      int gs = copy_pos(B, bcp[si].first, bpre[j].m[bcp[si].first] + bcp[si].second);
      for (int b = 0; b < C.hdim[bcp[si].first][ocp[j].first]; ++b)
        y.v.set(hy.off[gs][(int)j] + b, 0, pc.y.v.at(hpy.off[si][0] + b, 0));
    }
    BiLayout sb = bi_layout(E, pc.Cc, pc.A);
    for (size_t ai = 0; ai < acp.size(); ++ai) {
      int ga = copy_pos(A, acp[ai].first, apre[j].m[acp[ai].first] + acp[ai].second);
      for (int b = 0; b < E.dim[ocp[j].first][acp[ai].first]; ++b)
        dv.set(bl.off[j][ga] + b, 0, pc.delta.v.at(sb.off[0][ai] + b, 0));
    }
  }
  Conflation out;
  out.A = A;
  out.B = B;
  out.Cc = O;
  out.x = x;
  out.y = y;
  out.delta = ExtElem{O, A, dv};
  out.dominant = true;  // direct sum of dominant conflations
  out.codominant = false;
  out.id = "dom-sum:" + obj_str(C, O);
  return out;
}

ModMor defect_cover(const ExtriInstance& inst, const Conflation& cf) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  Conflation dc = dominant_for(inst, cf.Cc);
  /* solve a: F -> A with a_* theta = delta */
  int da = hom_layout(C, dc.A, cf.A).dim;
  Mat M(C.f, bi_layout(E, cf.Cc, cf.A).dim, da);
  for (int k = 0; k < da; ++k) {
    Mor u = mor_zero(C, dc.A, cf.A);
    u.v.set(k, 0, Q(1));
    Mat col = mat_mul(bi_push(E, u, cf.Cc), dc.delta.v);
    for (int i = 0; i < M.r; ++i) M.set(i, k, col.at(i, 0));
  }
  auto sol = solve(M, cf.delta.v);
  check(sol.has_value(), "defect_cover: dominant extension does not cover " + cf.id);
  Mor a{dc.A, cf.A, sol->particular};
  Defect Dth = defect_module(C, E, dc.delta);
  Defect Dd = defect_module(C, E, cf.delta);
  return defect_eta(C, E, Dth, dc.delta, Dd, cf.delta, a, mor_id(C, cf.Cc));
}

bool modmor_epi(const ModMor& eta) {
  for (size_t m = 0; m < eta.comp.size(); ++m)
    if (rank(eta.comp[m]) != eta.T.dim[m]) return false;
  return true;
}

bool nat_lift_exists(const CMod& S, const ModMor& e, const ModMor& psi) {
  const Category& C = *S.C;
  auto basis = nat_space(S, e.S);
  /* stack the pointwise matrices of e∘mu_i as columns, solve against psi */
  Mat M(C.f, 0, (int)basis.size()), rhs(C.f, 0, 1);
  for (int m = 0; m < C.n(); ++m) {
    Mat blk(C.f, e.T.dim[m] * S.dim[m], (int)basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
      Mat em = mat_mul(e.comp[m], basis[i].comp[m]);
      for (int r = 0; r < em.r; ++r)
        for (int c = 0; c < em.c; ++c) blk.set(r * em.c + c, (int)i, em.at(r, c));
    }
    Mat rb(C.f, e.T.dim[m] * S.dim[m], 1);
    for (int r = 0; r < psi.comp[m].r; ++r)
      for (int c = 0; c < psi.comp[m].c; ++c)
        rb.set(r * psi.comp[m].c + c, 0, psi.comp[m].at(r, c));
    M = M.r ? vcat(M, blk) : blk;
    rhs = rhs.r ? vcat(rhs, rb) : rb;
  }
  return solve(M, rhs).has_value();
}

FpModule fp_module(const Category& C, const FpPresentation& pres) {
  FpModule F;
  F.mod.init(C, false);
  F.proj.resize(C.n());
  std::vector<Mat> sect(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Cokernel ck = cokernel(post_matrix(C, pres.c, obj_indec(C, m)));
    F.mod.dim[m] = ck.quotient_dim;
    F.proj[m] = ck.projection;
    sect[m] = ck.section;
  }
  F.mod.init_zero_maps();
  for (int m = 0; m < C.n(); ++m)
    for (int m2 = 0; m2 < C.n(); ++m2)
      for (int b = 0; b < C.hdim[m][m2]; ++b) {
        Mor bm = mor_basis(C, obj_indec(C, m), obj_indec(C, m2), 0, 0, b);
        /* F(m2) -> F(m): descend -∘bm through the projections */
        F.mod.act[m][m2][b] =
            mat_mul(F.proj[m], mat_mul(pre_matrix(C, bm, pres.Cm), sect[m2]));
      }
  F.mod.validate();
  return F;
}

ReflectFp reflect_fp_functor(const ExtriInstance& inst, const FpPresentation& pres) {
  const Category& C = inst.C;
  const Bimod& E = inst.E;
  Field f = C.f;
  check(pres.c.src == pres.Cp && pres.c.tgt == pres.Cm,
        "reflect_fp_functor: presentation morphism has wrong endpoints");
  Conflation dc = dominant_for(inst, pres.Cm);   // F --x--> G --y--> C
  Conflation dp = dominant_for(inst, pres.Cp);   // F' -> G' -> C'
  int da = hom_layout(C, dp.A, dc.A).dim;
  int db = hom_layout(C, dp.B, dc.B).dim;
  Mat e1a = mat_neg(post_matrix(C, dc.x, dp.A));  // Hom(F',F) -> Hom(F',G)
  Mat e1b = pre_matrix(C, dp.x, dc.B);            // Hom(G',G) -> Hom(F',G)
  Mat e2b = post_matrix(C, dc.y, dp.B);           // Hom(G',G) -> Hom(G',C)
  BiLayout b3 = bi_layout(E, pres.Cp, dc.A);
  Mat e3a(f, b3.dim, da);
  for (int k = 0; k < da; ++k) {
    Mor u = mor_zero(C, dp.A, dc.A);
    u.v.set(k, 0, Q(1));
    Mat col = mat_mul(bi_push(E, u, pres.Cp), dp.delta.v);
    for (int i = 0; i < b3.dim; ++i) e3a.set(i, k, col.at(i, 0));
  }
  Mat M = vcat(vcat(hcat(e1a, e1b), hcat(Mat(f, e2b.r, da), e2b)),
               hcat(e3a, Mat(f, b3.dim, db)));
  Mat rhs(f, e1a.r, 1);
  rhs = vcat(rhs, compose(C, pres.c, dp.y).v);
  rhs = vcat(rhs, mat_mul(bi_pull(E, pres.c, dc.A), dc.delta.v));
  auto sol = solve(M, rhs);
  check(sol.has_value(), "reflect_fp_functor: no comparison lift (a,b) exists");
  Mor a = mor_zero(C, dp.A, dc.A), b = mor_zero(C, dp.B, dc.B);
  for (int k = 0; k < da; ++k) a.v.set(k, 0, sol->particular.at(k, 0));
  for (int k = 0; k < db; ++k) b.v.set(k, 0, sol->particular.at(da + k, 0));

  Defect Dp = defect_module(C, E, dp.delta);
  Defect Dm = defect_module(C, E, dc.delta);
  ReflectFp out;
  out.a = a;
  out.b = b;
  out.eta = defect_eta(C, E, Dp, dp.delta, Dm, dc.delta, a, pres.c);
  SubquotientMod ck = mod_cokernel(out.eta);
  out.gamma = ck.mod;
  out.unit.resize(C.n());
  out.fproj.resize(C.n());
  for (int m = 0; m < C.n(); ++m) {
    Cokernel fc = cokernel(post_matrix(C, pres.c, obj_indec(C, m)));
    out.fproj[m] = fc.projection;
    Mat q = mat_mul(ck.incl_or_proj.comp[m], Dm.p[m]);  // C(m,Cm) -> Gamma(m)
    out.unit[m] = mat_mul(q, fc.section);
    check(mat_mul(out.unit[m], fc.projection) == q,
          "reflect_fp_functor: unit not well-defined on the presentation");
  }
  return out;
}

bool gamma_reflection_check(const FpModule& F, const ReflectFp& rf, const Defect& sample) {
  return factor_check(F.mod, rf.unit, rf.gamma, sample.mod);
}

}  // namespace xk
