#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extrikit/defects.hpp"

using namespace xk;

TEST_CASE("zero extension has zero defect") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  Obj X = obj_indec(C, C.idx("P1[1]")), A = obj_indec(C, C.idx("P1"));
  ExtElem zero{X, A, Mat(C.f, bi_layout(inst.E, X, A).dim, 1)};
  Defect D = defect_module(C, inst.E, zero);
  CHECK(D.mod.is_zero());
}

TEST_CASE("pt: the generating extension has a one-dimensional defect") {
  for (long long p : {0LL, 5LL}) {
    CAPTURE(p);
    ExtriInstance inst = build_fixture("pt", Field{p});
    const Conflation& cf = inst.table[0];
    Defect D = defect_module(inst.C, inst.E, cf.delta);
    CHECK(D.mod.dim[0] == 1);
    CHECK(stable_yoneda_check(inst.C, inst.E, D));
    CHECK(reflection_check(inst.C, D, cf.Cc, D));
  }
}

TEST_CASE("defect_eta rejects pairs that are not morphisms of extensions") {
  ExtriInstance inst = build_fixture("pt");
  const Conflation& cf = inst.table[0];
  Defect D = defect_module(inst.C, inst.E, cf.delta);
  Mor a = mor_zero(inst.C, cf.A, cf.A);  // a_* delta = 0 != id^* delta
  CHECK_THROWS(defect_eta(inst.C, inst.E, D, cf.delta, D, cf.delta, a,
                          mor_id(inst.C, cf.Cc)));
}

TEST_CASE("assembled dominant conflations for sums") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  Obj O = obj_sum(obj_indec(C, C.idx("P1")), obj_indec(C, C.idx("(P1->P2)")));
  O = obj_sum(O, obj_indec(C, C.idx("P1")));
  Conflation cf = dominant_for(inst, O);
  CHECK(cf.Cc == O);
  CHECK(compose(C, cf.y, cf.x).v.is_zero());
  CHECK(mat_mul(bi_push(inst.E, cf.x, cf.Cc), cf.delta.v).is_zero());
  CHECK(verify_dominant(C, inst.E, cf));
}

TEST_CASE("designated dominant defects: stable-Yoneda dims and reflection") {
  for (const char* name : {"twoterm_a2", "a4sub", "split2"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name);
    const Category& C = inst.C;
    std::vector<Defect> samples;
    for (size_t i = 0; i < inst.table.size() && i < 4; ++i)
      samples.push_back(defect_module(C, inst.E, inst.table[i].delta));
    for (int c = 0; c < C.n(); ++c) {
      CAPTURE(c);
      const Conflation& dc = inst.table[inst.designated_dominant.at(c)];
      Defect D = defect_module(C, inst.E, dc.delta);
      CHECK(stable_yoneda_check(C, inst.E, D));
      CHECK(reflection_check(C, D, dc.Cc, D));
      for (auto& s : samples) CHECK(reflection_check(C, D, dc.Cc, s));
    }
  }
}

TEST_CASE("every table defect is covered by a dominant defect") {
  for (const char* name : {"twoterm_a2", "a4sub"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name);
    for (auto& cf : inst.table) {
      CAPTURE(cf.id);
      ModMor eta = defect_cover(inst, cf);
      CHECK(modmor_epi(eta));
    }
  }
}

TEST_CASE("dominant defects are projective: lifts along covers exist") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  const Conflation& cf = inst.table[0];
  ModMor e = defect_cover(inst, cf);
  for (int c = 0; c < C.n(); ++c) {
    const Conflation& dc = inst.table[inst.designated_dominant.at(c)];
    Defect S = defect_module(C, inst.E, dc.delta);
    for (const ModMor& psi : nat_space(S.mod, e.T)) CHECK(nat_lift_exists(S.mod, e, psi));
  }
}

TEST_CASE("reflect_fp: representable input reproduces the dominant defect") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  for (int c = 0; c < C.n(); ++c) {
    CAPTURE(c);
    FpPresentation pres{obj_zero(C), obj_indec(C, c),
                        mor_zero(C, obj_zero(C), obj_indec(C, c))};
    ReflectFp rf = reflect_fp_functor(inst, pres);
    Defect D = defect_module(C, inst.E,
                             inst.table[inst.designated_dominant.at(c)].delta);
    for (int m = 0; m < C.n(); ++m) CHECK(rf.gamma.dim[m] == D.mod.dim[m]);
    FpModule F = fp_module(C, pres);
    for (int m = 0; m < C.n(); ++m) CHECK(F.mod.dim[m] == hom_layout(C, obj_indec(C, m), obj_indec(C, c)).dim);
    Defect sample = defect_module(C, inst.E, inst.table[0].delta);
    CHECK(gamma_reflection_check(F, rf, sample));
    CHECK(gamma_reflection_check(F, rf, D));
  }
}

TEST_CASE("reflect_fp: the zero functor reflects to zero") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  int c = C.idx("(P1->P2)");
  FpPresentation pres{obj_indec(C, c), obj_indec(C, c), mor_id(C, obj_indec(C, c))};
  ReflectFp rf = reflect_fp_functor(inst, pres);
  CHECK(rf.gamma.is_zero());
  FpModule F = fp_module(C, pres);
  CHECK(F.mod.is_zero());
}

TEST_CASE("reflect_fp: a table defect presented by its conflation round-trips") {
  for (const char* name : {"twoterm_a2", "a4sub"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name);
    const Category& C = inst.C;
    for (size_t i = 0; i < inst.table.size() && i < 6; ++i) {
      const Conflation& cf = inst.table[i];
      CAPTURE(cf.id);
      FpPresentation pres{cf.B, cf.Cc, cf.y};
      ReflectFp rf = reflect_fp_functor(inst, pres);
      Defect D = defect_module(C, inst.E, cf.delta);
      FpModule F = fp_module(C, pres);
      for (int m = 0; m < C.n(); ++m) {
        CAPTURE(m);
        CHECK(rf.gamma.dim[m] == D.mod.dim[m]);
        CHECK(F.mod.dim[m] == D.mod.dim[m]);
        CHECK(rank(rf.unit[m]) == D.mod.dim[m]);  // unit is a pointwise iso
      }
      CHECK(gamma_reflection_check(F, rf, D));
    }
  }
}
