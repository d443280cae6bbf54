#pragma once
/* Contravariant defect modules Theta_delta = Im(delta_sharp: C(-,C) -> E(-,A)),
 * their induced morphisms, the reflection property of dominant defects, and
 * reflections of finitely presented functors. */

#include "extrikit/instances.hpp"

namespace xk {

struct Defect {
  Obj Cterm, Aterm;        // delta in E(Cterm, Aterm)
  CMod mod;                // contravariant, pointwise the image of delta_sharp
  std::vector<Mat> p;      // per indec m: C(m,Cterm) -> Theta(m), epi
  std::vector<Mat> incl;   // per indec m: Theta(m) -> E(m,Aterm), mono
};

Defect defect_module(const Category& C, const Bimod& E, const ExtElem& delta);

/* The unique eta: Theta_delta -> Theta_rho induced by a morphism of extensions
 * (a,c) with a_* delta = c^* rho (verified; throws otherwise). */
ModMor defect_eta(const Category& C, const Bimod& E, const Defect& D, const ExtElem& delta,
                  const Defect& R, const ExtElem& rho, const Mor& a, const Mor& c);

/* Reflection property of (Theta_theta, p_theta) for the representable C(-,Cobj):
 * every phi: C(-,Cobj) -> sample factors uniquely through p_theta. */
bool reflection_check(const Category& C, const Defect& Th, const Obj& Cobj,
                      const Defect& sample);

/* dim Theta(m) = dim C(m,Cterm) - dim P(m,Cterm) at every indec m. */
bool stable_yoneda_check(const Category& C, const Bimod& E, const Defect& Th);

/* Assembled designated dominant conflation for an arbitrary object (direct sum
 * of the per-indec designated conflations). */
Conflation dominant_for(const ExtriInstance& inst, const Obj& O);

/* Epi Theta_theta ->> Theta_delta from the designated dominant theta of the
 * conflation's third term; certifies enough projectives among the defects.
 * Throws if the comparison morphism does not exist. */
ModMor defect_cover(const ExtriInstance& inst, const Conflation& cf);
bool modmor_epi(const ModMor& eta);
/* Does psi: S -> T2 admit a natural lift along e: T1 ->> T2? */
bool nat_lift_exists(const CMod& S, const ModMor& e, const ModMor& psi);

struct FpPresentation {
  Obj Cp, Cm;  // C' and C
  Mor c;       // C' -> C; presents F = Cok(C(-,C') -> C(-,C))
};

/* F as a pointwise module with the defining projections C(m,Cm) -> F(m). */
struct FpModule {
  CMod mod;
  std::vector<Mat> proj;
};
FpModule fp_module(const Category& C, const FpPresentation& pres);

struct ReflectFp {
  CMod gamma;              // Gamma_F = Cok(eta), contravariant, pointwise
  std::vector<Mat> unit;   // per indec: F(m) -> Gamma_F(m), the unit gamma_F
  std::vector<Mat> fproj;  // per indec: C(m,Cm) -> F(m)
  Mor a, b;                // solved lifts between the dominant conflations
  ModMor eta;              // Theta_{theta'} -> Theta_theta
};
ReflectFp reflect_fp_functor(const ExtriInstance& inst, const FpPresentation& pres);

/* Reflection property of (Gamma_F, unit): every F -> sample factors uniquely. */
bool gamma_reflection_check(const FpModule& F, const ReflectFp& rf, const Defect& sample);

}  // namespace xk
