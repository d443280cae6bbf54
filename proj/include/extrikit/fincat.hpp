#pragma once
/* Finite K-linear Krull-Schmidt additive category: a fixed list of
 * indecomposables, Hom bases between them, and composition structure
 * constants.  Objects are multiplicity vectors, morphisms are block
 * coefficient vectors over the Hom bases. */

#include "extrikit/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xk {

struct Category {
  Field f;
  std::vector<std::string> names;
  std::vector<std::vector<int>> hdim;  // hdim[i][j] = dim Hom(i,j)
  std::vector<std::vector<std::vector<std::string>>> bname;
  /* comp[i][j][k]: rows = hdim[i][k], cols = hdim[i][j]*hdim[j][k];
   * column b1*hdim[j][k]+b2 holds the coefficients of b2∘b1 (b1: i->j, b2: j->k). */
  std::vector<std::vector<std::vector<Mat>>> comp;
  std::vector<Mat> idc;  // idc[i]: hdim[i][i] x 1, coefficients of id_i

  int n() const { return (int)names.size(); }
  int idx(const std::string& name) const;
  void init_tables();  // size hdim/bname/comp/idc after names are set
  /* Coefficients of b2∘b1 for basis morphisms b1: i->j, b2: j->k. */
  Mat comp_col(int i, int j, int k, int b1, int b2) const;
  void validate() const;  // associativity, unit laws, local endomorphism rings
  Subspace radical(int i, int j) const;  // rad(i,j) inside Hom(i,j)
};

struct Obj {
  std::vector<int> m;
  bool operator==(const Obj&) const = default;
};
Obj obj_indec(const Category& C, int i);
Obj obj_zero(const Category& C);
Obj obj_sum(const Obj& a, const Obj& b);
int obj_copies(const Obj& o);
std::string obj_str(const Category& C, const Obj& o);
/* Ordered (indec index, copy number) pairs. */
std::vector<std::pair<int, int>> copies(const Obj& o);

/* Layout of Hom(X,Y) coordinates: source copy outer, target copy middle,
 * basis index inner. */
struct HomLayout {
  std::vector<std::pair<int, int>> sc, tc;
  std::vector<std::vector<int>> off;  // off[si][ti]
  int dim = 0;
};
HomLayout hom_layout(const Category& C, const Obj& X, const Obj& Y);

struct Mor {
  Obj src, tgt;
  Mat v;  // hom_layout(src,tgt).dim x 1
};

Mor mor_zero(const Category& C, const Obj& X, const Obj& Y);
Mor mor_id(const Category& C, const Obj& X);
/* Single basis morphism between given copies. */
Mor mor_basis(const Category& C, const Obj& X, const Obj& Y, int si, int ti, int b);
Mor mor_add(const Mor& a, const Mor& b);
Mor mor_scale(const Q& s, const Mor& a);
Mor compose(const Category& C, const Mor& g, const Mor& f);  // g∘f
/* Matrix of f∘-: Hom(W,src f) -> Hom(W,tgt f). */
Mat post_matrix(const Category& C, const Mor& f, const Obj& W);
/* Matrix of -∘f: Hom(tgt f,Z) -> Hom(src f,Z). */
Mat pre_matrix(const Category& C, const Mor& f, const Obj& Z);
/* Block coefficient vector of f restricted to (source copy si, target copy ti). */
Mat mor_block(const Category& C, const Mor& f, int si, int ti);

/* rad(i, X) for an object X, blockwise. */
Subspace radical_into(const Category& C, int i, const Obj& X);
bool is_right_minimal(const Category& C, const Mor& f);

}  // namespace xk
