#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extrikit/instances.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace xk;

static std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST_CASE("every shipped fixture validates") {
  for (const char* name : {"split1", "split2", "extclosed_m", "pt", "twoterm_k",
                           "twoterm_a2", "twoterm_a3", "a4sub"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name);
    auto bad = validate_instance(inst);
    for (auto& s : bad) MESSAGE(name << ": " << s);
    CHECK(bad.empty());
    CHECK(is_fixture_name(name));
  }
  CHECK(!is_fixture_name("nope"));
}

/* Independent dimension oracle: chain maps modulo homotopy computed purely by
 * rank arithmetic, with the opposite ambient block order ([zero | neg]). */
static int hom_dim_oracle(const Category& P, const TwoTermCx& X, const TwoTermCx& Y) {
  Mat K = hcat(pre_matrix(P, X.d, Y.zero), mat_neg(post_matrix(P, Y.d, X.neg)));
  int nullity = hom_layout(P, X.zero, Y.zero).dim + hom_layout(P, X.neg, Y.neg).dim - rank(K);
  Mat H = vcat(post_matrix(P, Y.d, X.zero), pre_matrix(P, X.d, Y.neg));
  return nullity - rank(H);
}

static int ext_dim_oracle(const Category& P, const TwoTermCx& X, const TwoTermCx& Y) {
  Mat H = hcat(post_matrix(P, Y.d, X.neg), pre_matrix(P, X.d, Y.zero));
  return hom_layout(P, X.neg, Y.zero).dim - rank(H);
}

TEST_CASE("two-term hom/ext dimensions match the rank oracle") {
  for (const char* name : {"twoterm_k", "twoterm_a2", "twoterm_a3"}) {
    CAPTURE(name);
    int n = std::string(name) == "twoterm_k" ? 1 : (std::string(name) == "twoterm_a2" ? 2 : 3);
    Category P = linear_proj_category(n, Field{0});
    std::vector<std::string> names;
    std::vector<TwoTermCx> cxs = linear_two_term_indecs(P, names);
    ExtriInstance inst = build_fixture(name);
    REQUIRE(inst.C.n() == (int)cxs.size());
    for (int i = 0; i < inst.C.n(); ++i)
      for (int j = 0; j < inst.C.n(); ++j) {
        CHECK(inst.C.hdim[i][j] == hom_dim_oracle(P, cxs[i], cxs[j]));
        CHECK(inst.E.dim[i][j] == ext_dim_oracle(P, cxs[i], cxs[j]));
      }
  }
}

TEST_CASE("twoterm_a2: projectives are the stalks, injectives the shifts") {
  ExtriInstance inst = build_fixture("twoterm_a2");
  const Category& C = inst.C;
  REQUIRE(C.n() == 5);
  for (int i = 0; i < 5; ++i) {
    bool stalk = C.names[i] == "P1" || C.names[i] == "P2";
    bool shift = C.names[i] == "P1[1]" || C.names[i] == "P2[1]";
    CHECK(is_projective_object(C, inst.E, i) == stalk);
    CHECK(is_injective_object(C, inst.E, i) == shift);
  }
  /* designated data covers every indecomposable */
  for (int i = 0; i < 5; ++i) {
    CHECK(inst.designated_dominant.count(i) == 1);
    CHECK(inst.designated_codominant.count(i) == 1);
    CHECK(inst.inj_inflation.count(i) == 1);
    CHECK(inst.proj_deflation.count(i) == 1);
  }
  CHECK(inst.resolutions.size() == 5);
}

TEST_CASE("twoterm_k: known hom and ext table") {
  ExtriInstance inst = build_fixture("twoterm_k");
  const Category& C = inst.C;
  REQUIRE(C.n() == 2);
  int s = C.idx("P1"), t = C.idx("P1[1]");
  CHECK(C.hdim[s][s] == 1);
  CHECK(C.hdim[t][t] == 1);
  CHECK(C.hdim[s][t] == 0);
  CHECK(C.hdim[t][s] == 0);
  CHECK(inst.E.dim[t][s] == 1);  // E(K[1], K) = K
  CHECK(inst.E.dim[s][t] == 0);
  CHECK(inst.E.dim[s][s] == 0);
  CHECK(inst.E.dim[t][t] == 0);
}

TEST_CASE("a4sub: extension table and designated data") {
  ExtriInstance inst = build_fixture("a4sub");
  const Category& C = inst.C;
  int J = C.idx("[4;3]"), S = C.idx("2");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(inst.E.dim[i][j] == ((i == J && j == S) ? 1 : 0));
  for (int i = 0; i < 4; ++i) {
    CHECK(inst.designated_dominant.count(i) == 1);
    CHECK(inst.designated_codominant.count(i) == 1);
    CHECK(inst.inj_inflation.count(i) == 1);
    CHECK(inst.proj_deflation.count(i) == 1);
  }
  const Conflation& main = inst.table[inst.designated_dominant.at(J)];
  CHECK(main.dominant);
  CHECK(main.codominant);
  CHECK(main.A == obj_indec(C, S));
}

TEST_CASE("save/load round trip is byte-identical and validates") {
  for (const char* name : {"pt", "a4sub", "twoterm_a2"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name);
    std::string p1 = std::string("/tmp/xk_") + name + "_1.json";
    std::string p2 = std::string("/tmp/xk_") + name + "_2.json";
    save_instance(inst, p1);
    ExtriInstance back = load_instance(p1);
    CHECK(validate_instance(back).empty());
    save_instance(back, p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(back.C.n() == inst.C.n());
    CHECK(back.table.size() == inst.table.size());
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

TEST_CASE("corrupted composition table is reported") {
  ExtriInstance inst = build_fixture("a4sub");
  int W = inst.C.idx("3[-1]"), S = inst.C.idx("2");
  inst.C.comp[W][W][S].at(0, 0) = 0;  // identity no longer acts as identity
  auto bad = validate_instance(inst);
  CHECK(!bad.empty());
}

TEST_CASE("corrupted conflation is reported") {
  ExtriInstance inst = build_fixture("pt");
  inst.table[0].delta.v.at(0, 0) = 0;  // no longer dominant
  auto bad = validate_instance(inst);
  CHECK(!bad.empty());
}

TEST_CASE("fixtures over a prime field") {
  for (const char* name : {"twoterm_k", "pt", "a4sub"}) {
    CAPTURE(name);
    ExtriInstance inst = build_fixture(name, Field{5});
    CHECK(inst.C.f.p == 5);
    CHECK(validate_instance(inst).empty());
  }
}
