#pragma once
/* Instance bundles: a category + extension bimodule + conflation table with
 * designated dominant/codominant data, JSON (de)serialization, and fixture
 * builders (split categories, the periodic point, two-term complex
 * categories built by the chain-map-modulo-homotopy engine, and a hardcoded
 * four-object subcategory of a bounded derived category). */

#include "extrikit/posext.hpp"

#include <map>
#include <string>
#include <vector>

namespace xk {

/* Projective resolution data for one object: confs[k] realizes
 * syzygy_{k+1} -> P_k -> syzygy_k with syzygy_0 = Y and the last first term
 * projective.  Empty when Y itself is projective. */
struct ResolutionChain {
  Obj Y;
  std::vector<int> confs;  // indices into the conflation table
};

struct ExtriInstance {
  std::string name;
  Category C;
  Bimod E;
  std::vector<Conflation> table;
  std::map<int, int> designated_dominant;    // indec -> table index (F -> G -> c)
  std::map<int, int> designated_codominant;  // indec -> table index (a -> I -> J)
  std::map<int, int> inj_inflation;          // X -> table index of X -> I -> J, I injective
  std::map<int, int> proj_deflation;         // Y -> table index of Q -> P -> Y, P projective
  std::vector<ResolutionChain> resolutions;
};

/* Empty vector = valid; otherwise itemized violations. */
std::vector<std::string> validate_instance(const ExtriInstance& inst);

void save_instance(const ExtriInstance& inst, const std::string& path);
ExtriInstance load_instance(const std::string& path);

ExtriInstance build_split(const Category& C, const std::string& name);
ExtriInstance build_periodic_point(Field f = Field{0});

/* A two-term complex P^{-1} -> P^0 over the projective category. */
struct TwoTermCx {
  Obj neg, zero;
  Mor d;
};
ExtriInstance build_two_term(const Category& P, const std::vector<TwoTermCx>& cxs,
                             const std::vector<std::string>& cxnames,
                             const std::string& name);

/* Linear A_n projectives: Hom(P_i,P_j)=K for i<=j, all composites the basis map. */
Category linear_proj_category(int n, Field f);
/* All indecomposable two-term complexes over linear_proj_category(n):
 * degree-0 stalks, degree-(-1) stalks, and the cones P_i -> P_j (i<j). */
std::vector<TwoTermCx> linear_two_term_indecs(const Category& P,
                                              std::vector<std::string>& names_out);

/* split1, split2, extclosed_m, pt, twoterm_k, twoterm_a2, twoterm_a3, a4sub. */
ExtriInstance build_fixture(const std::string& name, Field f = Field{0});
bool is_fixture_name(const std::string& name);

}  // namespace xk
