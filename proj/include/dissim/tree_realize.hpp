#pragma once

#include <string>
#include <vector>

#include "dissim/family.hpp"
#include "dissim/realization.hpp"
#include "dissim/steiner.hpp"

namespace dissim {

// The three tree settings a hat family can be realized in.
enum class TreeMode {
  AtLeastNVertices,   // trees with >= n vertices, labels on any n vertices
  AtLeastNLeaves,     // trees where the n labelled vertices are leaves
  ExactlyNVertices,   // trees on exactly the n labelled vertices
};

struct TreeCheck {
  bool pass = false;
  ConditionReport report;
  std::vector<std::string> reasons;  // empty iff pass
};

// Realizable on a tree with at least n vertices iff every slack is >= 0 and
// at most one of them is exactly 0.
TreeCheck check_tree_vertices(const DissimilarityFamily& f);

// Realizable on a tree whose labelled vertices are leaves iff every slack is
// strictly positive.
TreeCheck check_tree_leaves(const DissimilarityFamily& f);

struct TreeExactCheck {
  bool pass = false;
  bool bound_ok = false;   // (i) nonnegative slacks, at most one equality
  bool tie_ok = false;     // (ii) an equality exists or the max value repeats
  bool spread_ok = false;  // (iii) max value repeats at most n-2 times
  ConditionReport report;
  std::vector<std::string> reasons;
};

// Realizable on a tree with exactly the n labelled vertices iff (i)-(iii)
// all hold.
TreeExactCheck check_tree_exact(const DissimilarityFamily& f);

// Star on vertices 1..n+1 centered at the new vertex n+1, edge to label k
// weighted slack_k / (n-1). Requires all slacks strictly positive.
Realization build_star_fresh_center(const DissimilarityFamily& f,
                                    const SteinerOptions& options = {});

// Star on the n labelled vertices centered at `center`, which must be the
// unique label with slack exactly 0; all other slacks strictly positive.
Realization build_star_centered(const DissimilarityFamily& f, int center,
                                const SteinerOptions& options = {});

// Caterpillar on exactly the n labelled vertices: the labels carrying the
// (repeated) maximum form a path, everything else hangs off its ends.
// `split` chooses how many of the remaining labels attach to the first path
// end (1 <= split <= n - multiplicity - 1). Requires the strict branch of
// the exact-n conditions: all slacks positive and the max value repeated.
Realization build_caterpillar(const DissimilarityFamily& f, int split = 1,
                              const SteinerOptions& options = {});

// Checks the conditions for the requested mode and, when they hold, builds
// a witness tree: star with fresh center, star at the equality label, or
// caterpillar, depending on the tie structure. Every witness is re-verified
// against f before it is returned.
RealizeOutcome realize_tree(const DissimilarityFamily& f, TreeMode mode,
                            const SteinerOptions& options = {});

}  // namespace dissim
