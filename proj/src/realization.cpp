#include "dissim/realization.hpp"

#include <algorithm>

#include "dissim/errors.hpp"

namespace dissim {

std::vector<VertexId> Realization::internal_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : graph.vertices) {
    if (std::find(graph.external.begin(), graph.external.end(), v) ==
        graph.external.end()) {
      out.push_back(v);
    }
  }
  return out;
}

WeightedGraph Realization::normalized_core() const {
  const int n = static_cast<int>(permutation.size());
  std::map<VertexId, VertexId> inverse;
  for (int pos = 1; pos <= n; ++pos) {
    const int original = permutation[pos - 1];
    if (original < 1 || original > n) throw Error("corrupt permutation");
    // The external vertex carrying original label `original` moves back to
    // its normalized position.
    inverse[graph.external.at(original - 1)] = pos;
  }
  WeightedGraph core = relabel(graph, inverse);
  for (int pos = 1; pos <= n; ++pos) core.external[pos - 1] = pos;
  return core;
}

}  // namespace dissim
