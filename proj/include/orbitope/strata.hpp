#pragma once

// Face types ordered by containment up to conjugation, with stratum dimensions.

#include "orbitope/faces.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbitope {

struct StratumDims {
  int stratum_dim = 0;  // dim K - dim K'_F - dim Z_F
  int dim_face = 0;     // dim k_F
  int base_dim = 0;     // dim K - dim H_F
};

/// Rejects the improper descriptor.
StratumDims stratum_dim(const RootSystem& rs, const FaceDescriptor& d);

struct StratumNode {
  int descriptor = -1;
  bool top = false;
  std::optional<int> stratum_dim;  // unset for the top node
  int dim_face = 0;
  int base_dim = 0;
};

struct StratumPoset {
  /// Same order as the descriptors; the top node is last.
  std::vector<StratumNode> nodes;
  /// Strict relations (a, b) meaning a precedes b.
  std::vector<std::pair<int, int>> order;
  /// Covering relations of the order.
  std::vector<std::pair<int, int>> covers;
  int group_dim = 0;

  bool less(int a, int b) const;
};

/// B1 < B2 when some Weyl translate of sigma(B1) lies in sigma(B2).
StratumPoset build_poset(const FaceClassification& c);

/// Strict monotonicity of stratum and face dimensions along the order, and
/// dim K = dim Z_F + dim K_F + dim K'_F + 2 (|positive roots| - |positive roots of J|).
/// Throws TheoremViolation on failure.
void check_stratification(const FaceClassification& c, const StratumPoset& poset);

}  // namespace orbitope
