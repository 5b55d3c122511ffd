#pragma once

#include <string>
#include <utility>

#include "qhall/intmatrix.hpp"
#include "qhall/lincomb.hpp"
#include "qhall/quiver.hpp"

namespace qhall {

enum class TorusMode { kPlain, kLambda };

/// Element of the commutative torus T (plain) or of the quantum torus T_Lambda.
class TorusElt : public LinComb<IntVec> {
 public:
  explicit TorusElt(int q, TorusMode mode = TorusMode::kLambda) : LinComb<IntVec>(q), mode_(mode) {}
  TorusElt(const LinComb<IntVec>& c, TorusMode mode) : LinComb<IntVec>(c), mode_(mode) {}
  static TorusElt monomial(int q, const IntVec& exp, TorusMode mode = TorusMode::kLambda);
  static TorusElt monomial(const Scalar& c, const IntVec& exp, TorusMode mode = TorusMode::kLambda);

  TorusMode mode() const { return mode_; }
  TorusElt& operator+=(const TorusElt& o);
  friend TorusElt operator+(TorusElt a, const TorusElt& b) { return a += b; }
  TorusElt scaled(const Scalar& s) const { return TorusElt(LinComb<IntVec>::scaled(s), mode_); }
  friend bool operator==(const TorusElt& a, const TorusElt& b) {
    return a.mode_ == b.mode_ && static_cast<const LinComb<IntVec>&>(a) == static_cast<const LinComb<IntVec>&>(b);
  }

  std::string to_string() const;

 private:
  TorusMode mode_;
};

using TorusTensor = LinComb<std::pair<IntVec, IntVec>>;

/// The data the twisted tensor product and mu need.  Exponents have length
/// k + b: a "module" block of length k followed by a "K" block of length b
/// that enters through tilde (padding into the last b coordinates of Z^m).
///   deg part:   Ep * top - tilde(bottom)
///   mu:         v^{-(a1,b1) - <a1,b1>} X^{-E a1 - Ep b1 + tilde(a2) + tilde(b2)}
struct TensorFrame {
  IntMatrix lambda;  // m x m
  IntMatrix E;       // m x k
  IntMatrix Ep;      // m x k
  IntMatrix euler;   // k x k
  int bottom = 0;

  int m() const { return lambda.rows(); }
  int k() const { return E.cols(); }
  IntVec top(const IntVec& x) const;
  IntVec bot(const IntVec& x) const;
  IntVec tilde(const IntVec& bottom_part) const;
  /// Ep * top(x) - tilde(bot(x)).
  IntVec deg(const IntVec& x) const;
  long long euler_form(const IntVec& a, const IntVec& b) const { return euler.form(a, b); }
  long long sym_form(const IntVec& a, const IntVec& b) const { return euler.form(a, b) + euler.form(b, a); }
};

/// (E~, E~', <,> of Q) with exponents (alpha_1; alpha_2) in Z^{2n}.
TensorFrame main_frame(const FramedSeed& seed);
/// (E(Q~), E'(Q~), <,> of Q~) with exponents in Z^{2n} and no K block.
TensorFrame appendix_frame(const FramedSeed& seed);

/// X^a <> X^b = X^{a+b}.
TorusElt t_mult(const TorusElt& x, const TorusElt& y);
/// X^a * X^b = v^{Lambda(a,b)} X^{a+b}.
TorusElt tlambda_mult(const IntMatrix& lambda, const TorusElt& x, const TorusElt& y);

TorusTensor tensor_monomial(int q, const IntVec& a, const IntVec& b);
/// (X^a (x) X^b) * (X^c (x) X^d) =
///   q^{1/2 Lambda(deg a + deg b, deg c + deg d) + (b1, c1) + <a1, d1>} X^{a+c} (x) X^{b+d}.
TorusTensor tensor_star(const TensorFrame& f, int q, const TorusTensor& x, const TorusTensor& y);
TorusElt mu(const TensorFrame& f, int q, const TorusTensor& x);

/// deg X^a = sum_{i<=n} a_i e_i - sum_j a_{n+j} b_j with b_j the j-th column
/// of B.  Throws kInvalidArgument on inhomogeneous or zero input.
IntVec torus_deg(const FramedSeed& seed, const TorusElt& x);
/// Whether all monomials share one degree.
bool torus_homogeneous(const FramedSeed& seed, const TorusElt& x);

}  // namespace qhall
