#include "dissim/graph.hpp"

#include <algorithm>
#include <sstream>

#include "dissim/errors.hpp"

namespace dissim {

const Rational* WeightedGraph::edge_weight(VertexId a, VertexId b) const {
  auto it = edges.find(make_edge_key(a, b));
  return it == edges.end() ? nullptr : &it->second;
}

int WeightedGraph::label_of(VertexId v) const {
  for (std::size_t i = 0; i < external.size(); ++i) {
    if (external[i] == v) return static_cast<int>(i) + 1;
  }
  return 0;
}

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::Ok: return "Ok";
    case ValidationCode::SelfLoop: return "SelfLoop";
    case ValidationCode::NonPositiveWeight: return "NonPositiveWeight";
    case ValidationCode::DuplicateEdge: return "DuplicateEdge";
    case ValidationCode::UnknownEndpoint: return "UnknownEndpoint";
    case ValidationCode::ExternalNotVertex: return "ExternalNotVertex";
    case ValidationCode::DuplicateExternal: return "DuplicateExternal";
  }
  return "?";
}

Validation validate(const WeightedGraph& g) {
  auto fail = [](ValidationCode code, const std::string& detail) {
    return Validation{code, std::string(to_string(code)) + ": " + detail};
  };

  for (const auto& [key, w] : g.edges) {
    const auto& [u, v] = key;
    std::ostringstream edge;
    edge << "edge (" << u << ", " << v << ")";
    if (u == v) return fail(ValidationCode::SelfLoop, edge.str());
    if (!w.positive()) {
      return fail(ValidationCode::NonPositiveWeight,
                  edge.str() + " has weight " + w.str());
    }
    if (!g.vertices.count(u) || !g.vertices.count(v)) {
      return fail(ValidationCode::UnknownEndpoint,
                  edge.str() + " references a vertex outside the vertex set");
    }
  }

  std::set<VertexId> seen;
  for (std::size_t i = 0; i < g.external.size(); ++i) {
    const VertexId v = g.external[i];
    std::ostringstream ctx;
    ctx << "label " << i + 1 << " -> vertex " << v;
    if (!g.vertices.count(v)) {
      return fail(ValidationCode::ExternalNotVertex, ctx.str());
    }
    if (!seen.insert(v).second) {
      return fail(ValidationCode::DuplicateExternal, ctx.str());
    }
  }
  return {};
}

SubgraphWeight subgraph_weight(const WeightedGraph& g,
                               const std::vector<EdgeKey>& edge_set) {
  SubgraphWeight result;
  std::set<EdgeKey> unique;
  for (const EdgeKey& raw : edge_set) {
    const EdgeKey key = make_edge_key(raw.first, raw.second);
    auto it = g.edges.find(key);
    if (it == g.edges.end()) {
      std::ostringstream msg;
      msg << "edge (" << raw.first << ", " << raw.second << ") not in graph";
      throw UnknownEdgeError(msg.str());
    }
    if (unique.insert(key).second) result.value += it->second;
  }
  result.edge_set.assign(unique.begin(), unique.end());
  return result;
}

WeightedGraph relabel(const WeightedGraph& g,
                      const std::map<VertexId, VertexId>& mapping) {
  auto map_id = [&mapping](VertexId v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };

  WeightedGraph out;
  for (VertexId v : g.vertices) {
    if (!out.vertices.insert(map_id(v)).second) {
      throw Error("relabel: vertex-id collision");
    }
  }
  for (const auto& [key, w] : g.edges) {
    if (!out.add_edge(map_id(key.first), map_id(key.second), w)) {
      throw Error("relabel: edge collision");
    }
  }
  out.external.reserve(g.external.size());
  for (VertexId v : g.external) out.external.push_back(map_id(v));
  return out;
}

WeightedGraph scale_weights(const WeightedGraph& g, const Rational& lambda) {
  if (!lambda.positive()) throw Error("scale_weights: factor must be positive");
  WeightedGraph out = g;
  for (auto& [key, w] : out.edges) w *= lambda;
  return out;
}

}  // namespace dissim
