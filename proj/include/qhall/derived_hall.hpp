#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "qhall/hall_morph.hpp"
#include "qhall/lincomb.hpp"
#include "qhall/repcat.hpp"
#include "qhall/torus.hpp"

namespace qhall {

/// Basis symbol u_{M + P[1]} of the derived Hall subalgebra.
struct DHKey {
  IsoClass module;
  IntVec proj;
  friend auto operator<=>(const DHKey&, const DHKey&) = default;
  friend bool operator==(const DHKey&, const DHKey&) = default;
};

using DHElement = LinComb<DHKey>;
using DHTensor = LinComb<std::pair<DHKey, DHKey>>;

/// The subalgebra of the twisted derived Hall algebra spanned by u_{M+P[1]}.
/// Structure constants come from the Riedtmann-Peng extension counts and the
/// Hom-fiber formula, not from direct enumeration.  With a seed, the category
/// must be over the framed quiver and the twisted product, psi and the framed
/// cluster character become available.
class DerivedHall {
 public:
  explicit DerivedHall(std::shared_ptr<const ModuleCategory> cat);
  DerivedHall(std::shared_ptr<const ModuleCategory> cat, FramedSeed seed);

  const ModuleCategory& category() const { return *cat_; }
  int q() const { return cat_->q(); }
  int n() const { return cat_->n(); }
  bool has_seed() const { return seed_.has_value(); }
  const FramedSeed& seed() const;

  DHKey key(const IsoClass& M, const IntVec& P) const;
  DHElement one() const;
  DHElement u(const IsoClass& M) const;
  DHElement u(const IsoClass& M, const IntVec& P) const;
  DHElement ushift(const IntVec& P) const;

  /// Dim X = m - p.
  IntVec dim(const DHKey& k) const { return cat_->dim(k.module) - cat_->proj_dim(k.proj); }
  /// E'(Q~)(m - p).
  IntVec deg(const DHKey& k) const;

  DHElement mult(const DHElement& x, const DHElement& y) const;
  DHElement mult_twisted(const DHElement& x, const DHElement& y) const;
  DHTensor comult(const DHElement& x) const;
  DHTensor tensor_mult(const DHTensor& x, const DHTensor& y) const;
  DHTensor tensor_mult_twisted(const DHTensor& x, const DHTensor& y) const;

  /// u_X -> X^{Dim X} in the commutative torus.
  TorusElt integrate(const DHElement& x) const;
  TorusTensor integrate2(const DHTensor& x) const;

  TorusElt psi_pipeline(const DHElement& x) const;
  /// sum_e v^{<p-e, m-e>} |Gr_e M| X^{E'(p-e) - E(m-e)} over Q~.
  TorusElt psi_closed(const IsoClass& M, const IntVec& P) const;
  TorusElt psi_closed(const DHElement& x) const;
  /// sum_e v^{<p-e, m-e>} |Gr_e M| X^{-B(Q~)e - E(Q~)m + t_P}.
  TorusElt cc_character(const IsoClass& M, const IntVec& P) const;

  /// q^{<m,n>} |Ext(M,N)_L| / |Hom(M,N)| from Riedtmann-Peng counts.
  const std::map<IsoClass, Scalar>& module_product(const IsoClass& M, const IsoClass& N) const;
  /// q^{-<p,n>} |_Q Hom(P,N)_B| keyed by (B, Q) from the Hom-fiber formula.
  const std::map<std::pair<IsoClass, IntVec>, Scalar>& shift_product(const IntVec& P, const IsoClass& N) const;

  /// dim Hom(M + P[1], N + Q[1][i]) in the derived category, assembled from
  /// the module-level Hom and Ext of the components.
  int derived_hom_dim(const DHKey& x, const DHKey& y, int i) const;

  std::string key_label(const DHKey& k) const;

 private:
  void basis_mult(const DHKey& a, const DHKey& b, DHElement& out, const Scalar& c) const;
  void basis_tensor_mult(const std::pair<DHKey, DHKey>& x, const std::pair<DHKey, DHKey>& y, DHTensor& out,
                         const Scalar& c, bool twisted) const;
  const IntMatrix& Ep() const;

  std::shared_ptr<const ModuleCategory> cat_;
  std::optional<FramedSeed> seed_;
  std::optional<TensorFrame> frame_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<IsoClass, IsoClass>, std::unique_ptr<std::map<IsoClass, Scalar>>> mod_;
  mutable std::map<std::pair<IntVec, IsoClass>, std::unique_ptr<std::map<std::pair<IsoClass, IntVec>, Scalar>>>
      shift_;
};

/// u_M -> X_M, u_{P[1]} -> X_{P[1]}; both engines must share the quiver.
MHElement phi_embed(const MorphismHall& H, const DHElement& x);

/// A module over Q viewed over the framed quiver (zero at frozen vertices).
IsoClass embed_module(const ModuleCategory& base, const ModuleCategory& framed, const IsoClass& M);
/// Projective multiplicities over Q viewed over Q~ (P_i of Q is P_i of Q~).
IntVec embed_proj(const IntVec& P, int framed_n);

}  // namespace qhall
