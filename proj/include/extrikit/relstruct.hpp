#pragma once
/* Cohomology of connected sequences threaded through a conflation, and the
 * witness-bounded largest relative substructure generated by the conflations
 * whose sequence is acyclic. */

#include "extrikit/negext.hpp"

namespace xk {

/* Pointwise complex through a conflation A -> B -> C: functor degrees -w..w,
 * three slots per degree with F^d(-,A), F^d(-,B), F^d(-,C) at complex degrees
 * 3d-2, 3d-1, 3d.  dims/maps indexed [indec][position]. */
struct GammaComplex {
  Field f;
  int w = 0;
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<Mat>> maps;  // maps[m][p]: dims[m][p] -> dims[m][p+1]
  int positions() const { return 3 * (2 * w + 1); }
  int degree(int pos) const { return -3 * w - 2 + pos; }
};

/* The negative-to-positive extension sequence of the first variance. */
GammaComplex gamma_complex_I(const Tower& T, const Conflation& conf, int w);
/* The same with every negative functor degree replaced by zero. */
GammaComplex gamma_complex_trunc(const Tower& T, const Conflation& conf, int w);

/* User-supplied connected sequence, already flattened per indec; lo == -hi. */
struct ConnSeq {
  int lo = 0, hi = 0;
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<Mat>> maps;
};
GammaComplex gamma_complex_from(const Field& f, const ConnSeq& seq);

/* Cohomology dims at the interior positions 1..positions()-2 (the boundary of
 * the truncation window carries no cohomology); h[indec][k] sits at complex
 * degree G.degree(k+1).  Throws if some composite is nonzero. */
std::vector<std::vector<int>> gamma_cohomology(const GammaComplex& G);
bool gamma_acyclic(const GammaComplex& G);

enum class SeqKind { NegI, TruncatedPos };

/* Sub-bimodule of E spanned by the orbits (under both actions) of the deltas
 * of all table conflations whose gamma complex is acyclic.  A lower
 * approximation of the largest relative structure: it only quantifies over
 * the witnesses shipped in the conflation table. */
struct WitnessSub {
  bool witness_bounded = true;
  std::vector<std::vector<Subspace>> sub;  // sub[i][j] inside E(i,j)
  std::vector<std::string> generators;     // ids of the acyclic conflations
};
WitnessSub acyclic_witness_subfunctor(const ExtriInstance& inst, const Tower& T,
                                      SeqKind kind, int w);
/* Stability of the spans under every basis action (sub-bifunctor check). */
bool witness_sub_closed(const Bimod& E, const WitnessSub& W);

}  // namespace xk
