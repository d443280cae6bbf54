#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testcats.hpp"

using namespace xk;
using namespace xk::testcats;

TEST_CASE("hom bimodule validates and assembles") {
  Category C = a2proj();
  Bimod H = hom_bimod(C);
  H.validate();
  Obj P1 = obj_indec(C, 0), P2 = obj_indec(C, 1);
  Obj X = obj_sum(P1, P2);
  CHECK(bi_layout(H, X, X).dim == hom_layout(C, X, X).dim);
  /* pushing along m: P1->P2 on Hom(P1,-) is postcomposition */
  Mor m = mor_basis(C, P1, P2, 0, 0, 0);
  Mat push = bi_push(H, m, P1);
  CHECK(push == post_matrix(C, m, P1));
}

TEST_CASE("pt bimodule and slices") {
  Category C = ptcat();
  Bimod E = ptext(C);
  E.validate();
  Obj T = obj_indec(C, 0);
  Obj TT = obj_sum(T, T);
  CHECK(bi_layout(E, TT, T).dim == 2);
  CMod F = cov_slice(E, T);
  CHECK(F.dim[0] == 1);
  F.validate();
  /* direct sum extension recovers components through the split projections */
  Mor i1 = mor_basis(C, T, TT, 0, 0, 0);
  Mat pull = bi_pull(E, i1, T);  // E(TT,T) -> E(T,T), restriction to first summand
  CHECK(pull.r == 1);
  CHECK(pull.c == 2);
  CHECK(pull.at(0, 0) == 1);
  CHECK(pull.at(0, 1) == 0);
}

TEST_CASE("nat_space Yoneda") {
  Category C = a2proj();
  Obj P1 = obj_indec(C, 0), P2 = obj_indec(C, 1);
  /* Nat(C(A,-), G) ≅ G(A) for representable source */
  for (int a = 0; a < 2; ++a) {
    Obj A = obj_indec(C, a);
    for (int g = 0; g < 2; ++g) {
      CMod G = hom_cov(C, obj_indec(C, g));
      auto ns = nat_space(hom_cov(C, A), G);
      CHECK((int)ns.size() == G.dim[a]);
      for (auto& phi : ns) CHECK(is_natural(phi));
    }
  }
  /* contravariant Yoneda too */
  auto ns = nat_space(hom_contra(C, P2), hom_contra(C, P1));
  CHECK((int)ns.size() == hom_layout(C, P2, P1).dim);
  auto ns2 = nat_space(hom_contra(C, P1), hom_contra(C, P2));
  CHECK((int)ns2.size() == hom_layout(C, P1, P2).dim);
}

TEST_CASE("nat_space on pt extension module") {
  Category C = ptcat();
  Bimod E = ptext(C);
  Obj T = obj_indec(C, 0);
  auto ns = nat_space(cov_slice(E, T), hom_cov(C, T));
  CHECK(ns.size() == 1);
  CMod zero;
  zero.init(C, true);
  zero.init_zero_maps();
  CHECK(nat_space(zero, hom_cov(C, T)).empty());
}

TEST_CASE("module kernel/cokernel/image") {
  Category C = a2proj();
  Obj P1 = obj_indec(C, 0), P2 = obj_indec(C, 1);
  CMod F = hom_contra(C, P2);
  /* identity: kernel 0, cokernel 0 */
  ModMor id = mod_zero_mor(F, F);
  for (int m = 0; m < 2; ++m) id.comp[m] = Mat::id(QQ, F.dim[m]);
  CHECK(mod_kernel(id).mod.is_zero());
  CHECK(mod_cokernel(id).mod.is_zero());
  /* zero: cokernel = target */
  ModMor z = mod_zero_mor(F, F);
  auto ck = mod_cokernel(z);
  CHECK(ck.mod.dim == F.dim);
  ck.mod.validate();
  /* -∘m : C(-,P1) -> C(-,P2) ... actually postcomposition with m */
  Mor m = mor_basis(C, P1, P2, 0, 0, 0);
  CMod S = hom_contra(C, P1);
  ModMor phi = mod_zero_mor(S, F);
  for (int k = 0; k < 2; ++k) phi.comp[k] = post_matrix(C, m, obj_indec(C, k));
  CHECK(is_natural(phi));
  auto im = mod_image(phi);
  im.mod.validate();
  CHECK(im.mod.dim[0] == 1);  // m∘End(P1) spans Hom(P1,P2)
  CHECK(im.mod.dim[1] == 0);  // Hom(P2,P1)=0 source
  auto kn = mod_kernel(phi);
  kn.mod.validate();
  CHECK(kn.mod.dim[0] == 0);
  CHECK(kn.mod.dim[1] == 0);
}

TEST_CASE("projective/injective ideals and stable hom") {
  Category Cp = ptcat();
  Bimod Ep = ptext(Cp);
  Obj T = obj_indec(Cp, 0);
  CHECK(projective_ideal(Cp, Ep, T, T).dim() == 0);
  CHECK(injective_ideal(Cp, Ep, T, T).dim() == 0);
  CHECK(stable_hom(Cp, projective_ideal(Cp, Ep, T, T), T, T).dim == 1);

  Category Ca = a2proj();
  Bimod Ez = zero_bimod(Ca);
  Obj P1 = obj_indec(Ca, 0), P2 = obj_indec(Ca, 1);
  CHECK(projective_ideal(Ca, Ez, P1, P2).dim() == 1);  // E=0: everything projective
  CHECK(stable_hom(Ca, projective_ideal(Ca, Ez, P1, P2), P1, P2).dim == 0);
  CHECK(is_projective_object(Ca, Ez, 0));
  CHECK(is_injective_object(Ca, Ez, 1));
  CHECK(!is_projective_object(Cp, Ep, 0));
}

TEST_CASE("layout permutations") {
  Category C = a2proj();
  Bimod H = hom_bimod(C);
  Obj A = obj_sum(obj_indec(C, 0), obj_indec(C, 1));
  Obj Y = obj_sum(obj_indec(C, 1), obj_indec(C, 1));
  Mat P = cov_slice_perm(H, A, Y);
  CHECK(P.r == bi_layout(H, A, Y).dim);
  CHECK(rank(P) == P.r);
  CMod S = cov_slice(H, A);
  CHECK(mod_layout(S, Y).dim == P.r);
  /* permutation is a bijection of coordinates */
  Mat Ph = hom_cov_perm(C, A, Y);
  CHECK(Ph == P);  // hom bimodule has the same dims
}
