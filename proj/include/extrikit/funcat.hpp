#pragma once
/* Bimodules C^op x C -> Vect and one-sided modules, stored pointwise on
 * indecomposables; natural-transformation spaces as one global linear system. */

#include "extrikit/fincat.hpp"

namespace xk {

struct Bimod {
  const Category* C = nullptr;
  std::vector<std::vector<int>> dim;  // dim[i][j] = dim E(i,j), i contravariant slot
  /* lact[i][j][j2][b]: E(i,j) -> E(i,j2) for basis b: j -> j2.
   * ract[j][i][i2][b]: E(i,j) -> E(i2,j) for basis b: i2 -> i. */
  std::vector<std::vector<std::vector<std::vector<Mat>>>> lact;
  std::vector<std::vector<std::vector<std::vector<Mat>>>> ract;

  void init(const Category& cat);  // zero bimodule of given dims (dims set separately)
  void init_zero_maps();           // size lact/ract consistently with dim
  void validate() const;           // unit, composition, commutation laws
  bool is_zero() const;
};

Bimod hom_bimod(const Category& C);

/* Layout of E(X,Y): X-copy outer, Y-copy middle, basis inner. */
struct BiLayout {
  std::vector<std::pair<int, int>> sc, tc;
  std::vector<std::vector<int>> off;
  int dim = 0;
};
BiLayout bi_layout(const Bimod& E, const Obj& X, const Obj& Y);

/* a_*: E(X,Y) -> E(X,Y2) for a: Y -> Y2. */
Mat bi_push(const Bimod& E, const Mor& a, const Obj& X);
/* c^*: E(X,Y) -> E(X2,Y) for c: X2 -> X. */
Mat bi_pull(const Bimod& E, const Mor& c, const Obj& Y);

struct CMod {
  const Category* C = nullptr;
  bool cov = true;
  std::vector<int> dim;
  /* act[m][m2][b] for basis b: m -> m2; direction F(m)->F(m2) if covariant,
   * F(m2)->F(m) if contravariant. */
  std::vector<std::vector<std::vector<Mat>>> act;

  void init(const Category& cat, bool covariant);
  void init_zero_maps();
  void validate() const;
  bool is_zero() const;
};

/* Layout of F(X): copies in order, block dim per indec. */
struct ModLayout {
  std::vector<std::pair<int, int>> cp;
  std::vector<int> off;
  int dim = 0;
};
ModLayout mod_layout(const CMod& F, const Obj& X);

/* F(f) for a general morphism: covariant F(X)->F(Y), contravariant F(Y)->F(X). */
Mat mod_map(const CMod& F, const Mor& f);

/* Slices of a bimodule. */
CMod cov_slice(const Bimod& E, const Obj& A);     // E(A,-)
CMod contra_slice(const Bimod& E, const Obj& A);  // E(-,A)
CMod hom_cov(const Category& C, const Obj& A);    // C(A,-)
CMod hom_contra(const Category& C, const Obj& A); // C(-,A)
CMod mod_dsum(const CMod& F, const CMod& G);

/* Owns copies of its endpoints; all modules here are tiny. */
struct ModMor {
  CMod S, T;
  std::vector<Mat> comp;  // per indec, F(m) -> G(m)
};
bool is_natural(const ModMor& phi);
ModMor mod_zero_mor(const CMod& S, const CMod& T);

std::vector<ModMor> nat_space(const CMod& F, const CMod& G);
/* Coordinates of phi in the given nat_space basis; throws if absent. */
Mat nat_coords(const std::vector<ModMor>& basis, const ModMor& phi);

struct SubquotientMod {
  CMod mod;
  ModMor incl_or_proj;        // kernel/image: incl mod->orig; cokernel: proj orig->mod
  std::vector<Mat> section;   // cokernel only: right inverses of the projections
};
SubquotientMod mod_kernel(const ModMor& phi);
SubquotientMod mod_cokernel(const ModMor& phi);
SubquotientMod mod_image(const ModMor& phi);

/* Ideal of projective morphisms P(X,Y) = {f | f^* = 0 on E}; injective dual. */
Subspace projective_ideal(const Category& C, const Bimod& E, const Obj& X, const Obj& Y);
Subspace injective_ideal(const Category& C, const Bimod& E, const Obj& X, const Obj& Y);

struct StableHom {
  int dim = 0;
  Mat projection;  // Hom(X,Y) -> quotient
};
StableHom stable_hom(const Category& C, const Subspace& ideal, const Obj& X, const Obj& Y);

bool is_projective_object(const Category& C, const Bimod& E, int i);  // E(i,-) = 0
bool is_injective_object(const Category& C, const Bimod& E, int i);   // E(-,i) = 0

/* E(A,Y) has two coordinate orders: (A-copy, Y-copy, basis) from bi_layout and
 * (Y-copy, A-copy, basis) from evaluating the slice E(A,-) at Y.  These return
 * the permutation from the first order to the second. */
Mat cov_slice_perm(const Bimod& E, const Obj& A, const Obj& Y);
Mat hom_cov_perm(const Category& C, const Obj& A, const Obj& Y);

}  // namespace xk
