#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// families, trees and connected graphs, plus a brute-force hat oracle.
// Everything is driven by mt19937_64 through draw_uniform, so the instances
// are identical on every platform.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "dissim/family.hpp"
#include "dissim/generate.hpp"
#include "dissim/graph.hpp"
#include "dissim/steiner.hpp"

namespace dissim::testsupport {

inline DissimilarityFamily fam(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return DissimilarityFamily(std::move(v));
}

inline DissimilarityFamily fam_s(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(Rational::from_string(s));
  return DissimilarityFamily(std::move(v));
}

// Positive rational with a small denominator: exercises non-integer exact
// arithmetic without growing the representations.
inline Rational random_weight(std::mt19937_64& rng) {
  static constexpr long dens[] = {1, 2, 3, 4, 5, 8, 10};
  const long num = static_cast<long>(draw_uniform(rng, 1, 24));
  const long den = dens[draw_uniform(rng, 0, 6)];
  return Rational(num, den);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(draw_uniform(rng, 0, i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Random tree on the given vertex ids: each vertex after the first attaches
// to a uniformly chosen earlier one.
inline WeightedGraph random_tree(const std::vector<VertexId>& ids,
                                 std::mt19937_64& rng) {
  WeightedGraph g;
  for (VertexId v : ids) g.add_vertex(v);
  for (std::size_t i = 1; i < ids.size(); ++i) {
    const std::size_t j = draw_uniform(rng, 0, i - 1);
    g.add_edge(ids[j], ids[i], random_weight(rng));
  }
  return g;
}

// Connected graph on vertices 1..nv: random tree plus up to extra_edges
// additional edges (duplicates are dropped).
inline WeightedGraph random_connected_graph(int nv, int extra_edges,
                                            std::mt19937_64& rng) {
  std::vector<VertexId> ids(nv);
  std::iota(ids.begin(), ids.end(), 1);
  WeightedGraph g = random_tree(ids, rng);
  for (int t = 0; t < extra_edges; ++t) {
    const auto u = static_cast<VertexId>(draw_uniform(rng, 1, nv));
    const auto v = static_cast<VertexId>(draw_uniform(rng, 1, nv));
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v, random_weight(rng));
  }
  return g;
}

// Marks n distinct vertices of g as the labels 1..n, in random order.
inline void mark_external(WeightedGraph& g, int n, std::mt19937_64& rng) {
  std::vector<VertexId> pool(g.vertices.begin(), g.vertices.end());
  for (int i = 0; i < n; ++i) {
    const std::size_t j = draw_uniform(rng, i, pool.size() - 1);
    std::swap(pool[i], pool[j]);
  }
  g.external.assign(pool.begin(), pool.begin() + n);
}

// Tree on n + extra vertices with labels on arbitrary distinct vertices.
inline WeightedGraph random_tree_vertices(int n, int extra,
                                          std::mt19937_64& rng) {
  std::vector<VertexId> ids(n + extra);
  std::iota(ids.begin(), ids.end(), 1);
  WeightedGraph g = random_tree(ids, rng);
  mark_external(g, n, rng);
  return g;
}

// Tree where every label sits on a leaf: a skeleton on fresh ids plus one
// pendant vertex per label.
inline WeightedGraph random_tree_leaves(int n, int skeleton,
                                        std::mt19937_64& rng) {
  std::vector<VertexId> ids(skeleton);
  std::iota(ids.begin(), ids.end(), n + 1);
  WeightedGraph g = random_tree(ids, rng);
  for (int label = 1; label <= n; ++label) {
    g.add_vertex(label);
    const auto hook =
        static_cast<VertexId>(n + 1 + draw_uniform(rng, 0, skeleton - 1));
    g.add_edge(label, hook, random_weight(rng));
    g.external.push_back(label);
  }
  return g;
}

// Tree on exactly the n labelled vertices.
inline WeightedGraph random_tree_exact(int n, std::mt19937_64& rng) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  WeightedGraph g = random_tree(ids, rng);
  g.external = ids;
  return g;
}

// Connected graph on exactly the n labelled vertices.
inline WeightedGraph random_graph_exact(int n, int extra,
                                        std::mt19937_64& rng) {
  WeightedGraph g = random_connected_graph(n, extra, rng);
  g.external.resize(n);
  std::iota(g.external.begin(), g.external.end(), 1);
  return g;
}

// Connected graph with 4 labels and `internal` extra vertices.
inline WeightedGraph random_graph_internal4(int internal, int extra,
                                            std::mt19937_64& rng) {
  WeightedGraph g = random_connected_graph(4 + internal, extra, rng);
  mark_external(g, 4, rng);
  return g;
}

// Hat family computed with the exponential reference minimizer only.
inline DissimilarityFamily hat_brute(const WeightedGraph& g,
                                     const SteinerOptions& options = {}) {
  const int n = g.n_external();
  std::vector<Rational> values;
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> terminals;
    for (int j = 1; j <= n; ++j) {
      if (j != i) terminals.push_back(g.external[j - 1]);
    }
    values.push_back(steiner_brute(g, terminals, options).weight);
  }
  return DissimilarityFamily(std::move(values));
}

}  // namespace dissim::testsupport
