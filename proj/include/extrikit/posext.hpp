#pragma once
/* Positive extension tower E^n built as one n-fold coend: for each pair of
 * indecomposables (c,a) a chain space
 *   ⊕_{(t_1..t_{n-1})} E(c,t_1) ⊗ E(t_1,t_2) ⊗ ... ⊗ E(t_{n-1},a)
 * modulo the relations (κ, b_*λ) - (b^*κ, λ) across every adjacent slot.
 * The cup maps δ_♯ (append) and δ^♯ (prepend) act on the same carrier. */

#include "extrikit/funcat.hpp"

#include <string>

namespace xk {

struct ExtElem {
  Obj Cterm, Aterm;  // element of E(Cterm, Aterm)
  Mat v;             // bi_layout(E, Cterm, Aterm) coordinates
};

struct Conflation {
  Obj A, B, Cc;
  Mor x, y;  // x: A -> B, y: B -> Cc
  ExtElem delta;
  bool dominant = false, codominant = false;
  std::string id;
};

struct ChainInfo {
  std::vector<std::vector<int>> tuples;  // intermediate indec tuples, length n-1
  std::vector<int> tupoff, tupdim;
  int dim = 0;
  int tuple_index(const std::vector<int>& t) const;  // -1 if absent
};

struct Tower {
  const Category* C = nullptr;
  Bimod E0;                  // Hom as a bimodule (level 0)
  std::vector<Bimod> levels; // levels[n] = E^n for 1 <= n <= nmax; levels[0] = E0
  int nmax = 0;
  /* chain data, indexed [n][c][a] for 1 <= n <= nmax (level 1 is trivial) */
  std::vector<std::vector<std::vector<ChainInfo>>> chains;
  std::vector<std::vector<std::vector<Mat>>> proj, sect;
  std::vector<std::vector<std::vector<Mat>>> rels;  // relation columns, kept for audits

  const Bimod& level(int n) const { return levels[n]; }
};

Tower build_tower(const Category& C, const Bimod& E, int nmax);
/* Soundness audit: every relation column dies under proj, and the level
 * actions kill relations (throws on violation). */
void tower_audit(const Tower& T);

/* ρ∪λ: ρ in E(M,A), λ in E^n(X,M); result in E^{n+1}(X,A). */
Mat class_of(const Tower& T, const ExtElem& rho, const Obj& X, const Mat& lambda, int n);
/* λ∪ρ for the contravariant side: λ in E^n(A,Y), ρ in E(C,A); result in E^{n+1}(C,Y). */
Mat class_of_pre(const Tower& T, const Obj& Y, const Mat& lambda, const ExtElem& rho, int n);

/* Pointwise matrices of the cup maps (bi_layout coordinates).
 * lower: E^n(X,C) -> E^{n+1}(X,A);  upper: E^n(A,Y) -> E^{n+1}(C,Y). */
Mat lower_sharp_at(const Tower& T, const ExtElem& delta, int n, const Obj& X);
Mat upper_sharp_at(const Tower& T, const ExtElem& delta, int n, const Obj& Y);
/* The same as module morphisms between slices (components per indec). */
ModMor delta_lower_sharp(const Tower& T, const ExtElem& delta, int n);
ModMor delta_upper_sharp(const Tower& T, const ExtElem& delta, int n);

bool has_trivialization(const Category& C, const Conflation& conf, const CMod& F,
                        const Mat& lambda);

bool verify_dominant(const Category& C, const Bimod& E, const Conflation& conf);
bool verify_codominant(const Category& C, const Bimod& E, const Conflation& conf);
/* Generator recipe: F = sum of indecomposables carrying a basis of E(c,-). */
ExtElem find_dominant_extension(const Category& C, const Bimod& E, int c);

struct SeqCheck {
  bool exact = true;
  std::vector<std::string> failures;
};
/* Long exact sequences of both variances, levels 0..nmax, at every indec. */
SeqCheck les_check(const Tower& T, const Bimod& E, const Conflation& conf);

struct GlDim {
  int value = 0;      // meaningful when bounded
  bool bounded = true;  // false: E^{nmax} still nonzero, report ">= nmax"
};
GlDim pos_gldim(const Tower& T);

/* Satellite alternative: E^n(c,-) as an iterated cokernel along designated
 * dominant conflations (one per indec, conflation F -> G -> c). */
struct SatTower {
  struct Level {
    std::vector<CMod> mod;                             // mod[c] = S^n(c,-)
    std::vector<std::vector<std::vector<ModMor>>> act; // act[c][c2][b]: S(c2,-)->S(c,-)
  };
  std::vector<Level> lev;
};
SatTower satellite_tower(const Category& C, const Bimod& E,
                         const std::vector<Conflation>& dom, int nmax);
int sat_dim(const SatTower& S, int n, int c, int a);

}  // namespace xk
