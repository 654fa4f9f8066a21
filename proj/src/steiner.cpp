#include "dissim/steiner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "dissim/errors.hpp"

namespace dissim {

namespace {

// Index-based view of a validated graph. Edge indices follow the sorted
// edge-key order, so "smaller index" == "lexicographically smaller edge".
struct Indexed {
  std::vector<VertexId> ids;  // sorted
  std::map<VertexId, int> index;
  std::vector<EdgeKey> edge_keys;
  std::vector<Rational> edge_weights;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)

  explicit Indexed(const WeightedGraph& g) {
    ids.assign(g.vertices.begin(), g.vertices.end());
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    adj.resize(ids.size());
    for (const auto& [key, w] : g.edges) {
      const int e = static_cast<int>(edge_keys.size());
      const int u = index.at(key.first);
      const int v = index.at(key.second);
      edge_keys.push_back(key);
      edge_weights.push_back(w);
      adj[u].emplace_back(v, e);
      adj[v].emplace_back(u, e);
    }
  }
};

// A partial solution: exact weight plus its sorted edge-index set. Ordered
// by weight, then lexicographically by the edge list, which makes every
// tie-break deterministic and invariant under positive scaling.
struct Candidate {
  Rational weight;
  std::vector<int> edges;
};

bool better(const Candidate& a, const Candidate& b) {
  const auto c = a.weight <=> b.weight;
  if (c != 0) return c < 0;
  return std::lexicographical_compare(a.edges.begin(), a.edges.end(),
                                      b.edges.begin(), b.edges.end());
}

Candidate combine(const Candidate& a, const Candidate& b) {
  Candidate out;
  out.weight = a.weight + b.weight;
  out.edges.reserve(a.edges.size() + b.edges.size());
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(),
                 b.edges.end(), std::back_inserter(out.edges));
  return out;
}

using MaybeCandidate = std::optional<Candidate>;

void keep_min(MaybeCandidate& slot, Candidate cand) {
  if (!slot || better(cand, *slot)) slot = std::move(cand);
}

// Exact all-pairs shortest paths (Floyd-Warshall) carrying witness paths.
std::vector<std::vector<MaybeCandidate>> shortest_paths(const Indexed& ix) {
  const int n = static_cast<int>(ix.ids.size());
  std::vector<std::vector<MaybeCandidate>> d(n, std::vector<MaybeCandidate>(n));
  for (int i = 0; i < n; ++i) d[i][i] = Candidate{};
  for (std::size_t e = 0; e < ix.edge_keys.size(); ++e) {
    const int u = ix.index.at(ix.edge_keys[e].first);
    const int v = ix.index.at(ix.edge_keys[e].second);
    Candidate cand{ix.edge_weights[e], {static_cast<int>(e)}};
    keep_min(d[u][v], cand);
    keep_min(d[v][u], std::move(cand));
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        keep_min(d[i][j], combine(*d[i][k], *d[k][j]));
      }
    }
  }
  return d;
}

std::vector<int> check_terminals(const std::vector<VertexId>& terminals,
                                 const Indexed& ix) {
  if (terminals.empty()) throw PreconditionError("terminal set is empty");
  std::set<int> idx;
  for (VertexId t : terminals) {
    auto it = ix.index.find(t);
    if (it == ix.index.end()) {
      std::ostringstream msg;
      msg << "terminal " << t << " is not a vertex of the graph";
      throw PreconditionError(msg.str());
    }
    idx.insert(it->second);
  }
  return {idx.begin(), idx.end()};
}

void check_connected(const Indexed& ix, const std::vector<int>& terminals) {
  std::vector<char> seen(ix.ids.size(), 0);
  std::vector<int> stack{terminals.front()};
  seen[terminals.front()] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, e] : ix.adj[v]) {
      (void)e;
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  for (int t : terminals) {
    if (!seen[t]) {
      std::ostringstream msg;
      msg << "terminals are not in one connected component (vertex "
          << ix.ids[t] << " unreachable from vertex " << ix.ids[terminals.front()]
          << ")";
      throw DisconnectedError(msg.str());
    }
  }
}

void require_valid(const WeightedGraph& g) {
  const Validation v = validate(g);
  if (!v.ok()) throw PreconditionError("invalid graph: " + v.message);
}

// Internal sanity check: the returned edge set must be a tree that spans the
// terminals, has no non-terminal leaves, and adds up to the claimed weight.
void check_witness(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                   const Rational& weight, const std::vector<EdgeKey>& witness) {
  SubgraphWeight sub = subgraph_weight(g, witness);
  if (sub.value != weight || sub.edge_set.size() != witness.size()) {
    throw VerificationError("steiner witness does not match its weight");
  }
  std::map<VertexId, int> degree;
  std::map<VertexId, VertexId> parent;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::set<VertexId> touched;
  for (const EdgeKey& e : witness) {
    touched.insert(e.first);
    touched.insert(e.second);
  }
  for (VertexId v : touched) parent[v] = v;
  std::size_t merges = 0;
  for (const EdgeKey& e : witness) {
    ++degree[e.first];
    ++degree[e.second];
    VertexId a = find(e.first), b = find(e.second);
    if (a == b) throw VerificationError("steiner witness contains a cycle");
    parent[a] = b;
    ++merges;
  }
  if (!witness.empty() && merges + 1 != touched.size()) {
    throw VerificationError("steiner witness is not connected");
  }
  std::set<VertexId> term_set(terminals.begin(), terminals.end());
  if (witness.empty()) {
    if (term_set.size() > 1) throw VerificationError("empty witness for >1 terminal");
    return;
  }
  for (VertexId t : term_set) {
    if (!touched.count(t)) {
      throw VerificationError("steiner witness misses a terminal");
    }
  }
  const VertexId root = find(*term_set.begin());
  for (VertexId t : term_set) {
    if (find(t) != root) {
      throw VerificationError("steiner witness misses a terminal");
    }
  }
  for (const auto& [v, deg] : degree) {
    if (deg == 1 && !term_set.count(v)) {
      throw VerificationError("steiner witness has a non-terminal leaf");
    }
  }
}

SteinerResult finish(const WeightedGraph& g, const Indexed& ix,
                     const std::vector<VertexId>& terminals, Candidate best) {
  SteinerResult result;
  result.weight = std::move(best.weight);
  result.witness.reserve(best.edges.size());
  for (int e : best.edges) result.witness.push_back(ix.edge_keys[e]);
  check_witness(g, terminals, result.weight, result.witness);
  return result;
}

}  // namespace

SteinerResult steiner_weight(const WeightedGraph& g,
                             const std::vector<VertexId>& terminals,
                             const SteinerOptions& options) {
  require_valid(g);
  const Indexed ix(g);
  const std::vector<int> terms = check_terminals(terminals, ix);
  const int k = static_cast<int>(terms.size());
  if (k > options.terminal_cap) {
    std::ostringstream msg;
    msg << k << " terminals exceed the terminal cap of " << options.terminal_cap;
    throw TooLargeError(msg.str());
  }
  check_connected(ix, terms);
  if (k == 1) return {};

  const auto dist = shortest_paths(ix);
  const int n = static_cast<int>(ix.ids.size());
  const int root = terms[k - 1];
  const int m = k - 1;  // base terminals in the subset lattice
  const int full = (1 << m) - 1;

  // dp[S][v]: best tree spanning {base terminals in S} + vertex v.
  std::vector<std::vector<MaybeCandidate>> dp(
      static_cast<std::size_t>(full) + 1, std::vector<MaybeCandidate>(n));
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < n; ++v) dp[1u << i][v] = dist[terms[i]][v];
  }
  std::vector<MaybeCandidate> inner(n);
  for (int S = 1; S <= full; ++S) {
    if ((S & (S - 1)) == 0) continue;  // singletons are seeded above
    const int low = S & -S;
    for (int u = 0; u < n; ++u) {
      inner[u].reset();
      // Each unordered split {Y, S\Y} is visited once by fixing low in Y.
      for (int Y = (S - 1) & S; Y > 0; Y = (Y - 1) & S) {
        if (!(Y & low)) continue;
        if (Y == S) continue;
        const auto& a = dp[Y][u];
        const auto& b = dp[S ^ Y][u];
        if (a && b) keep_min(inner[u], combine(*a, *b));
      }
    }
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < n; ++u) {
        if (inner[u] && dist[u][v]) {
          keep_min(dp[S][v], combine(*inner[u], *dist[u][v]));
        }
      }
    }
  }
  if (!dp[full][root]) throw DisconnectedError("terminals are not connected");
  return finish(g, ix, terminals, *dp[full][root]);
}

SteinerResult steiner_brute(const WeightedGraph& g,
                            const std::vector<VertexId>& terminals,
                            const SteinerOptions& options) {
  require_valid(g);
  const Indexed ix(g);
  const int n = static_cast<int>(ix.ids.size());
  if (n > options.brute_vertex_cap) {
    std::ostringstream msg;
    msg << n << " vertices exceed the brute-force cap of " << options.brute_vertex_cap;
    throw TooLargeError(msg.str());
  }
  const std::vector<int> terms = check_terminals(terminals, ix);
  check_connected(ix, terms);
  if (terms.size() == 1) return {};

  std::vector<int> free_vertices;
  std::vector<char> is_term(n, 0);
  for (int t : terms) is_term[t] = 1;
  for (int v = 0; v < n; ++v) {
    if (!is_term[v]) free_vertices.push_back(v);
  }
  // Global edge order by (weight, index) drives every spanning-tree run.
  std::vector<int> order(ix.edge_keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&ix](int a, int b) {
    return ix.edge_weights[a] < ix.edge_weights[b];
  });

  MaybeCandidate best;
  std::vector<int> comp(n);
  for (std::uint64_t mask = 0; mask < (1ull << free_vertices.size()); ++mask) {
    std::vector<char> in(is_term.begin(), is_term.end());
    int size = static_cast<int>(terms.size());
    for (std::size_t b = 0; b < free_vertices.size(); ++b) {
      if (mask & (1ull << b)) {
        in[free_vertices[b]] = 1;
        ++size;
      }
    }
    // Minimum spanning tree of the induced subgraph (Kruskal).
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&comp, &find](int v) {
      return comp[v] == v ? v : comp[v] = find(comp[v]);
    };
    Candidate cand;
    int joined = 1;
    for (int e : order) {
      const int u = ix.index.at(ix.edge_keys[e].first);
      const int v = ix.index.at(ix.edge_keys[e].second);
      if (!in[u] || !in[v]) continue;
      const int a = find(u), b = find(v);
      if (a == b) continue;
      comp[a] = b;
      cand.weight += ix.edge_weights[e];
      cand.edges.push_back(e);
      ++joined;
    }
    if (joined != size) continue;  // induced subgraph not connected
    std::sort(cand.edges.begin(), cand.edges.end());
    keep_min(best, std::move(cand));
  }
  if (!best) throw DisconnectedError("terminals are not connected");
  return finish(g, ix, terminals, *best);
}

DissimilarityVector dissimilarity_vector(const WeightedGraph& g, int k,
                                         const SteinerOptions& options) {
  require_valid(g);
  const int n = g.n_external();
  if (n < 1) throw PreconditionError("graph has no external vertices");
  if (k < 1 || k > n) {
    throw PreconditionError("subset size k must satisfy 1 <= k <= n");
  }
  DissimilarityVector out;
  out.n = n;
  out.k = k;
  // Lexicographic enumeration of the k-subsets of {1..n}.
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    std::vector<VertexId> terminals;
    terminals.reserve(k);
    for (int label : subset) terminals.push_back(g.external[label - 1]);
    out.entries.emplace(subset, steiner_weight(g, terminals, options).weight);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

DissimilarityFamily hat_vector(const WeightedGraph& g,
                               const SteinerOptions& options) {
  require_valid(g);
  const int n = g.n_external();
  if (n < 3) throw PreconditionError("hat family needs at least 3 external labels");
  std::vector<Rational> values;
  values.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> terminals;
    terminals.reserve(n - 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i) terminals.push_back(g.external[j - 1]);
    }
    values.push_back(steiner_weight(g, terminals, options).weight);
  }
  return DissimilarityFamily(std::move(values));
}

}  // namespace dissim
