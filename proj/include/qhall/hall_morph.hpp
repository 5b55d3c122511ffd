#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "qhall/lincomb.hpp"
#include "qhall/quiver.hpp"
#include "qhall/repcat.hpp"
#include "qhall/torus.hpp"

namespace qhall {

/// Basis symbol K_alpha * X_{M + P[1]}; P is a multiplicity vector over the
/// indecomposable projectives P_1..P_n.
struct MHKey {
  IntVec alpha;
  IsoClass module;
  IntVec proj;
  friend auto operator<=>(const MHKey&, const MHKey&) = default;
  friend bool operator==(const MHKey&, const MHKey&) = default;
};

using MHElement = LinComb<MHKey>;
using MHTensor = LinComb<std::pair<MHKey, MHKey>>;

/// K_P + Z_Q + C_M in C_2(P); P and Q are projective multiplicity vectors.
struct C2Object {
  IntVec K;
  IntVec Z;
  IsoClass C;
};

/// The localized Hall algebra MH(A) of the morphism category, with its
/// twisted form, comultiplication and integration.
class MorphismHall {
 public:
  MorphismHall(std::shared_ptr<const ModuleCategory> cat, FramedSeed seed);

  const ModuleCategory& category() const { return *cat_; }
  const std::shared_ptr<const ModuleCategory>& category_ptr() const { return cat_; }
  const FramedSeed& seed() const { return seed_; }
  const TensorFrame& frame() const { return frame_; }
  int q() const { return cat_->q(); }
  int n() const { return cat_->n(); }

  MHKey key(const IntVec& alpha, const IsoClass& M, const IntVec& P) const;
  MHKey key_K(const IntVec& alpha) const;
  MHKey key_X(const IsoClass& M, const IntVec& P) const;
  MHElement one() const;
  MHElement K(const IntVec& alpha) const;
  MHElement X(const IsoClass& M) const;
  MHElement X(const IsoClass& M, const IntVec& P) const;
  MHElement Xshift(const IntVec& P) const;

  IntVec module_dim(const MHKey& k) const { return cat_->dim(k.module); }
  IntVec proj_dim(const MHKey& k) const { return cat_->proj_dim(k.proj); }
  /// E~'(m - p) - alpha~.
  IntVec deg(const MHKey& k) const;

  MHElement mult(const MHElement& x, const MHElement& y) const;
  MHElement mult_twisted(const MHElement& x, const MHElement& y) const;
  MHTensor comult(const MHElement& x) const;
  MHTensor tensor_mult(const MHTensor& x, const MHTensor& y) const;
  MHTensor tensor_mult_twisted(const MHTensor& x, const MHTensor& y) const;

  /// K_alpha * X_{M+P[1]} -> X^{(m - p; alpha)} in the commutative torus.
  TorusElt integrate(const MHElement& x) const;
  TorusTensor integrate2(const MHTensor& x) const;

  TorusElt psi_pipeline(const MHElement& x) const;
  /// sum_e v^{<p-e, m-e>} |Gr_e M| X^{E~'(p-e) - E~(m-e)}.
  TorusElt psi_closed(const IsoClass& M, const IntVec& P) const;
  /// Closed form extended to K_alpha * X_{M+P[1]} through X^{alpha~}.
  TorusElt psi_closed(const MHElement& x) const;
  /// sum_e v^{<p-e, m-e>} |Gr_e M| X^{-B~e - E~m + t_P}, t_P = Dim top(P).
  TorusElt cc_character(const IsoClass& M, const IntVec& P) const;

  /// Coefficients of X_M * X_N, from direct extension enumeration.
  const std::map<IsoClass, Scalar>& module_product(const IsoClass& M, const IsoClass& N) const;
  /// Coefficients of X_{P[1]} * X_N keyed by (B, Q), from direct
  /// enumeration of Hom(P, N).
  const std::map<std::pair<IsoClass, IntVec>, Scalar>& shift_product(const IntVec& P, const IsoClass& N) const;

  C2Object c2_C(const IsoClass& M) const;
  C2Object c2_Z(const IntVec& P) const;
  C2Object c2_K(const IntVec& P) const;
  C2Object c2_sum(const C2Object& a, const C2Object& b) const;
  /// (Dim M_0 - Dim M_{-1}; Dim M_0).
  IntVec dim_vec_c2(const C2Object& x) const;
  /// Coordinates in the basis C_{P_i}, K_{P_i}: (a - b; b) for M_0 = sum a_i P_i,
  /// M_{-1} = sum b_i P_i.
  IntVec ind(const C2Object& x) const;
  IntVec ind0(const C2Object& x) const;
  /// Projective terms (M_0, M_{-1}) as multiplicity vectors.
  std::pair<IntVec, IntVec> c2_terms(const C2Object& x) const;

  std::string key_label(const MHKey& k) const;

 private:
  void basis_mult(const MHKey& a, const MHKey& b, MHElement& out, const Scalar& c) const;
  void basis_tensor_mult(const std::pair<MHKey, MHKey>& x, const std::pair<MHKey, MHKey>& y, MHTensor& out,
                         const Scalar& c, bool twisted) const;

  std::shared_ptr<const ModuleCategory> cat_;
  FramedSeed seed_;
  TensorFrame frame_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<IsoClass, IsoClass>, std::unique_ptr<std::map<IsoClass, Scalar>>> mod_;
  mutable std::map<std::pair<IntVec, IsoClass>, std::unique_ptr<std::map<std::pair<IsoClass, IntVec>, Scalar>>>
      shift_;
};

}  // namespace qhall
