#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhall/intmatrix.hpp"

namespace qhall {

struct Arrow {
  int tail;  // 0-based
  int head;
  int mult;
};

/// Acyclic valued quiver on vertices 0..n-1.
///
/// For an arrow i->j with multiplicity r, r is read as r'_ij, the dimension of
/// Ext^1(S_i, S_j) over End(S_i)^op; the transposed entry r_ji is then
/// d_i * r / d_j, which must be integral.  With all valuations 1 this is the
/// plain arrow count.
class ValuedQuiver {
 public:
  ValuedQuiver(int n, std::vector<int> valuations, const std::vector<Arrow>& arrows);
  /// Unvalued quiver (all d_i = 1).
  ValuedQuiver(int n, const std::vector<Arrow>& arrows)
      : ValuedQuiver(n, std::vector<int>(n, 1), arrows) {}

  int size() const { return n_; }
  int valuation(int i) const { return valuations_.at(i); }
  const std::vector<int>& valuations() const { return valuations_; }
  int arrow_count(int tail, int head) const { return counts_(tail, head); }
  /// One entry per arrow copy, sorted by (tail, head).
  const std::vector<std::pair<int, int>>& arrow_list() const { return arrow_list_; }
  const std::vector<int>& topological_order() const { return topo_; }
  bool simply_laced() const;
  /// Stable textual identity used for cache keys.
  std::string canonical_string() const;

  friend bool operator==(const ValuedQuiver& a, const ValuedQuiver& b) {
    return a.n_ == b.n_ && a.valuations_ == b.valuations_ && a.counts_ == b.counts_;
  }

 private:
  int n_;
  std::vector<int> valuations_;
  IntMatrix counts_;
  std::vector<std::pair<int, int>> arrow_list_;
  std::vector<int> topo_;
};

/// R, R', B = R' - R, E = I - R', E' = I - R, D for a valued quiver.
struct ExchangeData {
  IntMatrix R;
  IntMatrix Rp;
  IntMatrix B;
  IntMatrix E;
  IntMatrix Ep;
  IntMatrix D;
  /// Matrix of the Euler form, D (I - R') = (I - R^T) D.
  IntMatrix euler;
};

ExchangeData exchange_data(const ValuedQuiver& q);

/// <alpha, beta> = alpha^T D (I - R') beta.
int euler_form(const ValuedQuiver& q, const IntVec& alpha, const IntVec& beta);
/// (alpha, beta) = <alpha, beta> + <beta, alpha>.
int sym_form(const ValuedQuiver& q, const IntVec& alpha, const IntVec& beta);

/// Principal framing of a base quiver together with a compatible skew form.
class FramedSeed {
 public:
  /// Adds vertices n+i with one arrow n+i -> i and d_{n+i} = d_i.  The
  /// default Lambda is [[0, -D], [D, -D B]]; a supplied Lambda is validated.
  static FramedSeed principal(const ValuedQuiver& base,
                              const std::optional<IntMatrix>& lambda = std::nullopt);
  /// Same data with an arbitrary Lambda and no validation.  Only meant for
  /// negative controls.
  static FramedSeed unchecked(const ValuedQuiver& base, const IntMatrix& lambda);

  int n() const { return base_.size(); }
  int m() const { return 2 * base_.size(); }
  const ValuedQuiver& base() const { return base_; }
  const ValuedQuiver& framed() const { return framed_; }
  const ExchangeData& base_data() const { return base_data_; }
  const ExchangeData& framed_data() const { return framed_data_; }

  /// 2n x n matrices B~, E~, E~'.
  const IntMatrix& Bt() const { return Bt_; }
  const IntMatrix& Et() const { return Et_; }
  const IntMatrix& Ept() const { return Ept_; }
  const IntMatrix& lambda() const { return lambda_; }
  /// Full 2n x 2n matrices B(Q~), E(Q~), E'(Q~).
  const IntMatrix& Bfull() const { return framed_data_.B; }
  const IntMatrix& Efull() const { return framed_data_.E; }
  const IntMatrix& Epfull() const { return framed_data_.Ep; }

  int lambda_form(const IntVec& a, const IntVec& b) const {
    return static_cast<int>(lambda_.form(a, b));
  }
  /// alpha~ = (0; alpha).
  IntVec tilde(const IntVec& alpha) const;

  bool lambda_skew() const { return lambda_.is_skew_symmetric(); }
  /// Lambda (-B~) == (D; 0).
  bool compatible() const;
  /// -Lambda B(Q~) == diag(d_1..d_2n).
  bool appendix_compatible() const;

 private:
  FramedSeed(const ValuedQuiver& base, const ValuedQuiver& framed);

  ValuedQuiver base_;
  ValuedQuiver framed_;
  ExchangeData base_data_;
  ExchangeData framed_data_;
  IntMatrix Bt_, Et_, Ept_;
  IntMatrix lambda_;
};

struct LemmaCheck {
  std::string name;
  long long lhs;
  long long rhs;
  bool ok() const { return lhs == rhs; }
};

struct FormLemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_ok() const;
};

/// Evaluates both sides of the compatible-pair identities on (alpha, beta):
///   Lambda(E~a, B~b) = -<b,a>,  Lambda(B~a, B~b) = <b,a> - <a,b>,
///   Lambda(E~'a, E~'b) = Lambda(E~a, E~b), the four-vector mixed identity
///   with (a1, b1, a2, b2) = (alpha, beta, beta, alpha), and
///   Lambda(E~'a, b~) = Lambda(E~a, b~),  Lambda(a~, E~'b) = Lambda(a~, E~b).
FormLemmaReport check_form_lemmas(const FramedSeed& seed, const IntVec& alpha,
                                  const IntVec& beta);

/// Mixed identity for four independent vectors.
LemmaCheck check_mixed_identity(const FramedSeed& seed, const IntVec& a1, const IntVec& b1,
                                const IntVec& a2, const IntVec& b2);

}  // namespace qhall
