#pragma once

#include <string>
#include <vector>

#include "qhall/hall_morph.hpp"
#include "qhall/torus.hpp"

namespace qhall {

/// A seed of the quantum cluster algebra with every cluster variable written
/// in the initial quantum torus.  Entries n..m-1 of `cluster` are frozen.
struct QuantumSeed {
  IntMatrix lambda;  // m x m, current
  IntMatrix Bt;      // m x n, current
  IntMatrix lambda0; // m x m, initial torus
  IntMatrix D;       // n x n
  std::vector<TorusElt> cluster;

  int n() const { return Bt.cols(); }
  int m() const { return Bt.rows(); }
  /// Lambda(-B~) == (D; 0).
  bool compatible() const;
};

QuantumSeed initial_seed(const FramedSeed& seed, int q);

/// M(a) = v^{-sum_{i<j} Lambda_ij a_i a_j} Y_1^{a_1} ... Y_m^{a_m} for a >= 0.
TorusElt toric_monomial(const QuantumSeed& s, const IntVec& a);

/// Quantum exchange at mutable k (0-based); fails with kIncompatibleSeed if
/// the mutated pair stops being compatible.
QuantumSeed mutate(const QuantumSeed& s, int k);

/// Solves z * y = x exactly in the quantum torus by peeling off lex-leading
/// terms; fails with kInternal when y does not divide x.
TorusElt right_divide(const IntMatrix& lambda, const TorusElt& x, const TorusElt& y);

struct EnumeratedVariable {
  TorusElt value;
  std::vector<int> path;  // 1-based mutation sequence that first produced it
};

/// Breadth-first over mutation sequences without immediate repeats.  The
/// result starts with the initial mutable variables (empty paths).
std::vector<EnumeratedVariable> enumerate_variables(const QuantumSeed& s, int depth);

struct QcaMatch {
  std::string label;
  bool matched = false;
  std::vector<int> path;
};

struct QcaReport {
  std::vector<QcaMatch> matches;
  int enumerated = 0;
  /// Enumerated variables not hit by any rigid indecomposable or shifted
  /// projective; only counted against the verdict when the catalog holds
  /// every indecomposable.
  int unmatched_variables = 0;
  bool exhaustive = false;
  bool all_matched() const;
};

/// Checks Psi(X_M) for every rigid indecomposable M in the catalog, and
/// Psi(X_{P_i[1]}), against the enumerated variables.
QcaReport compare_with_psi(const MorphismHall& H, int depth);

}  // namespace qhall
