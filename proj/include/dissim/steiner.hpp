#pragma once

#include <map>
#include <vector>

#include "dissim/family.hpp"
#include "dissim/graph.hpp"

namespace dissim {

struct SteinerOptions {
  // Soft cap on |terminals| for the subset DP (memory grows as 2^k * n).
  int terminal_cap = 20;
  // Hard cap on |vertices| for the brute-force oracle (time grows as 2^n).
  int brute_vertex_cap = 16;
};

struct SteinerResult {
  Rational weight;
  // A minimum-weight connected subgraph spanning the terminals; always a
  // tree whose leaves are terminals. Deterministic: among all optima the
  // DP's comparisons prefer the lexicographically smaller sorted edge list.
  std::vector<EdgeKey> witness;
};

// Minimum total weight of a connected subgraph of g containing all
// terminals, by the subset dynamic program over terminals with an exact
// all-pairs shortest-path closure. Terminals must be vertices of g; throws
// DisconnectedError when they do not share a component, TooLargeError past
// the terminal cap.
SteinerResult steiner_weight(const WeightedGraph& g,
                             const std::vector<VertexId>& terminals,
                             const SteinerOptions& options = {});

// Independent reference minimizer: enumerates every vertex superset of the
// terminals and takes the best spanning tree of the connected induced
// subgraphs. Exponential in |vertices|; guarded by brute_vertex_cap.
SteinerResult steiner_brute(const WeightedGraph& g,
                            const std::vector<VertexId>& terminals,
                            const SteinerOptions& options = {});

// All joint dissimilarities of k external labels, keyed by the sorted label
// subset, enumerated in lexicographic order.
struct DissimilarityVector {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> entries;
};

DissimilarityVector dissimilarity_vector(const WeightedGraph& g, int k,
                                         const SteinerOptions& options = {});

// The hat family of a graph with n >= 3 external labels: value i is the
// dissimilarity of all labels except i.
DissimilarityFamily hat_vector(const WeightedGraph& g,
                               const SteinerOptions& options = {});

}  // namespace dissim
