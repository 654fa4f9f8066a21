#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dissim/graph.hpp"

namespace dissim {

// A witness graph produced by one of the constructive realizers, together
// with the label normalization that was applied internally and a
// human-readable build log. The graph itself is always expressed in the
// caller's original labels.
struct Realization {
  WeightedGraph graph;
  // permutation[p-1] = original label placed at normalized position p.
  std::vector<int> permutation;
  std::vector<std::string> trace;

  // Vertices that carry no external label (Steiner points), sorted.
  std::vector<VertexId> internal_vertices() const;

  // The graph re-expressed in normalized positions (externals mapped through
  // the inverse permutation). Constructions depend only on the normalized
  // family, so this core is invariant under relabelings of the input.
  WeightedGraph normalized_core() const;
};

// Result of a realizability dispatcher: either a witness or the reasons why
// the requested class rejects the family.
struct RealizeOutcome {
  std::optional<Realization> realization;
  std::vector<std::string> reasons;

  bool ok() const { return realization.has_value(); }
};

}  // namespace dissim
