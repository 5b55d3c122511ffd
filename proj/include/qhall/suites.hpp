#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhall/context.hpp"

namespace qhall {

struct SuiteOptions {
  int samples = 100;
  std::uint64_t rng_seed = 1;
  /// Total-dimension bound for modules entering a check; capped by the
  /// catalog bound.
  int max_dim = 4;
  /// Bound on the number of indecomposable projective summands of P.
  int proj_copies = 2;
  /// Total-dimension bound for framed-quiver modules in the appendix suite;
  /// framed shifts there use at most one projective summand.
  int appendix_dim = 4;
  /// Mutation depth for the qca suite; 0 picks 5 for rank <= 2 and 8 above.
  int qca_depth = 0;
};

struct SuiteReport {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_samples;
  std::vector<std::string> notes;
  double seconds = 0;
  std::uint64_t rng_seed = 0;
  bool passed() const { return failures == 0 && checks > 0; }
};

/// relations, bialgebra, integration, psi, cluster-mult, gvectors, appendix,
/// qca, counting.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws kInvalidArgument for an unknown name.
/// Exceptions raised inside a check count as failures of that check.
SuiteReport run_suite(const Context& ctx, const std::string& name, const SuiteOptions& opts);

}  // namespace qhall
