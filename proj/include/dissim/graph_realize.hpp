#pragma once

#include <string>
#include <vector>

#include "dissim/family.hpp"
#include "dissim/realization.hpp"
#include "dissim/steiner.hpp"

namespace dissim {

// The two graph settings a hat family can be realized in.
enum class GraphMode {
  ExactlyNVertices,  // graphs on exactly the n labelled vertices
  InternalN4,        // n = 4 labels, Steiner points allowed
};

struct GraphCheck {
  bool pass = false;
  bool bound_ok = false;      // every slack >= 0
  bool tie_strict_ok = false; // a repeated maximum forces strict slacks
  ConditionReport report;
  std::vector<std::string> reasons;
};

// Realizable on a graph with exactly the n labelled vertices iff every
// slack is >= 0 and, when the maximum value repeats, every slack is > 0.
GraphCheck check_graph_exact(const DissimilarityFamily& f);

// Consequence of nonnegative slacks: k * D_i never exceeds the sum of D_j
// over any k+1 labels j != i, for 1 <= k <= n-2. Returns the verdict,
// checked at the tightest subset (the k+1 smallest other values).
bool implied_subset_inequalities(const DissimilarityFamily& f, int k);

struct QuintupleTerm {
  int t, k, j, i;
  Rational margin;  // 3 D_k + 3 D_j + 2 D_i - 5 D_t
};

struct TriangleTerm {
  int i, j, k;
  Rational margin;  // D_j + D_k - D_i
};

struct InternalN4Check {
  bool pass = false;
  bool weighted_ok = false;   // every quintuple margin >= 0
  bool triangles_ok = false;  // every triangle margin > 0
  std::vector<QuintupleTerm> quintuples;  // all 24 ordered (t,k,j,i)
  std::vector<TriangleTerm> triangles;    // all 12 (i, {j,k})
  std::vector<std::string> reasons;
};

// Realizability test for 4-label families on graphs that may use Steiner
// points. Throws WrongNError unless n = 4.
InternalN4Check check_internal_n4(const DissimilarityFamily& f);

// n = 3: the triangle whose edge opposite each label carries that label's
// value. Requires nonnegative slacks.
Realization build_triangle(const DissimilarityFamily& f,
                           const SteinerOptions& options = {});

// n >= 4, maximum value repeated k >= 2 times, all slacks positive:
// complete graph on the k maximum labels plus two spokes per remaining
// label.
Realization build_repeated_max(const DissimilarityFamily& f,
                               const SteinerOptions& options = {});

// One level of the unique-maximum recursion: the family size, the label
// normalization used, the peeled amount x = D_max - D_second, and the
// reduced family handed to the next level.
struct InductionLevel {
  int n = 0;
  std::vector<int> permutation;
  Rational x;
  std::vector<Rational> reduced;
};
using InductionTrace = std::vector<InductionLevel>;

// n >= 4, unique maximum, nonnegative slacks: recursive construction that
// peels x = D_max - D_second off, realizes the smaller family, and attaches
// a pendant edge. The optional trace records every reduction level.
Realization build_unique_max(const DissimilarityFamily& f,
                             InductionTrace* trace = nullptr,
                             const SteinerOptions& options = {});

// n = 4 with Steiner points: three internal vertices, each label joined to
// the two internal vertices it is not paired with.
Realization build_internal_n4(const DissimilarityFamily& f,
                              const SteinerOptions& options = {});

// Checks the conditions for the requested mode and dispatches to the
// matching construction. Every witness is re-verified against f.
RealizeOutcome realize_graph(const DissimilarityFamily& f, GraphMode mode,
                             const SteinerOptions& options = {});

}  // namespace dissim
