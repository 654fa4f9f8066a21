#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dissim/rational.hpp"

namespace dissim {

using VertexId = int;

// Undirected edge key, normalized so first <= second.
using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey make_edge_key(VertexId a, VertexId b) {
  return a <= b ? EdgeKey{a, b} : EdgeKey{b, a};
}

// Finite undirected graph with positive rational edge weights and an ordered
// list of "external" vertices carrying the labels 1..n. Intentionally a
// permissive container: structural invariants are checked by validate(), so
// tests and document decoding can observe precise violations.
struct WeightedGraph {
  std::set<VertexId> vertices;
  std::map<EdgeKey, Rational> edges;
  std::vector<VertexId> external;  // external[i] is the vertex with label i+1

  void add_vertex(VertexId v) { vertices.insert(v); }

  // Records the edge; returns false (leaving the weight untouched) when the
  // vertex pair is already present.
  bool add_edge(VertexId a, VertexId b, Rational w) {
    return edges.emplace(make_edge_key(a, b), std::move(w)).second;
  }

  bool has_edge(VertexId a, VertexId b) const {
    return edges.count(make_edge_key(a, b)) > 0;
  }

  // Null when the edge is absent.
  const Rational* edge_weight(VertexId a, VertexId b) const;

  int n_external() const { return static_cast<int>(external.size()); }

  // Label (1..n) of an external vertex, or 0 if the vertex is internal.
  int label_of(VertexId v) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

enum class ValidationCode {
  Ok,
  SelfLoop,
  NonPositiveWeight,
  DuplicateEdge,      // only observable while building from an edge list
  UnknownEndpoint,
  ExternalNotVertex,
  DuplicateExternal,
};

struct Validation {
  ValidationCode code = ValidationCode::Ok;
  std::string message;

  bool ok() const { return code == ValidationCode::Ok; }
};

const char* to_string(ValidationCode code);

// Checks the structural invariants and reports the first violation:
// no self-loops, positive weights, edge endpoints and external labels all
// members of the vertex set, external vertices distinct.
Validation validate(const WeightedGraph& g);

struct SubgraphWeight {
  Rational value;
  std::vector<EdgeKey> edge_set;  // normalized and sorted
};

// Total weight of the given edge subset. Throws UnknownEdgeError when an
// edge is not present in the graph.
SubgraphWeight subgraph_weight(const WeightedGraph& g,
                               const std::vector<EdgeKey>& edge_set);

// Applies a vertex-id substitution; ids absent from the map are kept.
// Throws Error if the substitution would collide two vertices.
WeightedGraph relabel(const WeightedGraph& g,
                      const std::map<VertexId, VertexId>& mapping);

// Multiplies every edge weight by lambda (> 0).
WeightedGraph scale_weights(const WeightedGraph& g, const Rational& lambda);

}  // namespace dissim
