#pragma once

#include <optional>
#include <string>

#include "qhall/intmatrix.hpp"
#include "qhall/quiver.hpp"

namespace qhall {

/// Contents of a quiver config file:
///   {"vertices": n, "valuations": [d_i], "arrows": [[i, j, mult], ...],
///    "q": prime, "lambda": optional 2n x 2n matrix}
/// Vertices are 1-based in the file.  Two optional extras: "max_dim" (module
/// catalog bound) and "unchecked_lambda" (accept an incompatible lambda, for
/// negative controls).
struct QuiverConfig {
  ValuedQuiver quiver{1, {}};
  int q = 2;
  std::optional<IntMatrix> lambda;
  bool unchecked_lambda = false;
  int max_dim = 4;
  std::string name;
};

QuiverConfig parse_config(const std::string& text);
QuiverConfig load_config(const std::string& path);
/// The framed seed the config describes; validates lambda unless unchecked.
FramedSeed make_seed(const QuiverConfig& cfg);

bool is_prime(int q);

}  // namespace qhall
