#include "dissim/tree_realize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "dissim/errors.hpp"

namespace dissim {

namespace {

std::string slack_reason(const ConditionReport& report, bool strict) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < report.slack.size(); ++i) {
    const Rational& s = report.slack[i];
    if (strict ? !s.positive() : s.negative()) {
      if (!first) out << ", ";
      first = false;
      out << "label " << i + 1 << " (slack " << s.str() << ")";
    }
  }
  return out.str();
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  return perm;
}

// Labels sorted by descending value; ties by ascending label.
std::vector<int> descending_permutation(const DissimilarityFamily& f) {
  std::vector<int> perm = identity_permutation(f.n());
  std::stable_sort(perm.begin(), perm.end(), [&f](int a, int b) {
    return f.at(a) > f.at(b);
  });
  return perm;
}

std::string permutation_str(const std::vector<int>& perm) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out << ", ";
    out << perm[i];
  }
  out << "]";
  return out.str();
}

// Every construction re-derives its own hat family through the Steiner
// module; a mismatch means the construction itself is buggy.
void verify_realization(const Realization& r, const DissimilarityFamily& f,
                        const SteinerOptions& options) {
  const Validation check = validate(r.graph);
  if (!check.ok()) {
    throw VerificationError("constructed graph is invalid: " + check.message);
  }
  if (hat_vector(r.graph, options) != f) {
    throw VerificationError(
        "constructed graph does not reproduce the input family");
  }
}

}  // namespace

TreeCheck check_tree_vertices(const DissimilarityFamily& f) {
  TreeCheck out;
  out.report = analyze(f);
  if (!out.report.slacks_nonnegative) {
    out.reasons.push_back(
        "(n-2)*D[i] must not exceed the sum of the other values; violated at " +
        slack_reason(out.report, /*strict=*/false));
  }
  if (out.report.equality_labels.size() > 1) {
    std::ostringstream msg;
    msg << "at most one label may attain equality, found "
        << out.report.equality_labels.size() << " (labels";
    for (int label : out.report.equality_labels) msg << " " << label;
    msg << ")";
    out.reasons.push_back(msg.str());
  }
  out.pass = out.reasons.empty();
  return out;
}

TreeCheck check_tree_leaves(const DissimilarityFamily& f) {
  TreeCheck out;
  out.report = analyze(f);
  if (!out.report.slacks_positive) {
    out.reasons.push_back(
        "(n-2)*D[i] must stay strictly below the sum of the other values; "
        "violated at " + slack_reason(out.report, /*strict=*/true));
  }
  out.pass = out.reasons.empty();
  return out;
}

TreeExactCheck check_tree_exact(const DissimilarityFamily& f) {
  TreeExactCheck out;
  out.report = analyze(f);
  const TreeCheck vertices = check_tree_vertices(f);

  out.bound_ok = vertices.pass;
  if (!out.bound_ok) {
    for (const std::string& r : vertices.reasons) {
      out.reasons.push_back("(i) " + r);
    }
  }
  const bool has_equality = !out.report.equality_labels.empty();
  out.tie_ok = has_equality || out.report.max_multiplicity >= 2;
  if (!out.tie_ok) {
    out.reasons.push_back(
        "(ii) needs a label with slack exactly 0 or a repeated maximum "
        "value; the maximum " + out.report.max_value.str() +
        " is unique and no slack is 0");
  }
  out.spread_ok = out.report.max_multiplicity <= f.n() - 2;
  if (!out.spread_ok) {
    std::ostringstream msg;
    msg << "(iii) the maximum value may repeat at most n-2 = " << f.n() - 2
        << " times, found " << out.report.max_multiplicity;
    out.reasons.push_back(msg.str());
  }
  out.pass = out.bound_ok && out.tie_ok && out.spread_ok;
  return out;
}

Realization build_star_fresh_center(const DissimilarityFamily& f,
                                    const SteinerOptions& options) {
  const TreeCheck check = check_tree_leaves(f);
  if (!check.pass) {
    throw PreconditionError("star with fresh center needs strictly positive "
                            "slacks: " + check.reasons.front());
  }
  const int n = f.n();
  const VertexId center = n + 1;
  Realization out;
  // The star is label-symmetric; normalizing by descending value anyway
  // keeps the normalized core canonical under relabelings of the input.
  out.permutation = descending_permutation(f);
  const auto& perm = out.permutation;

  WeightedGraph core;
  core.add_vertex(center);
  for (int p = 1; p <= n; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
    core.add_edge(center, p,
                  check.report.slack[perm[p - 1] - 1] / Rational(n - 1));
  }
  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= n; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());

  std::ostringstream line;
  line << "star with fresh center " << center
       << "; edge to label k weighs slack_k/(n-1)";
  out.trace.push_back(line.str());
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the star equals the input");
  return out;
}

Realization build_star_centered(const DissimilarityFamily& f, int center,
                                const SteinerOptions& options) {
  const ConditionReport report = analyze(f);
  if (center < 1 || center > f.n()) {
    throw PreconditionError("center label out of range");
  }
  if (report.equality_labels != std::vector<int>{center} ||
      !report.slacks_nonnegative) {
    throw PreconditionError(
        "star centered at a label needs that label to be the unique one "
        "with slack 0 and all other slacks strictly positive");
  }
  const int n = f.n();
  Realization out;
  // Slack 0 makes `center` the strict maximum, so it sorts to position 1.
  out.permutation = descending_permutation(f);
  const auto& perm = out.permutation;
  if (perm[0] != center) {
    throw VerificationError("internal: the slack-0 label is not the unique "
                            "maximum of the family");
  }

  WeightedGraph core;
  for (int p = 1; p <= n; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
    if (p > 1) {
      core.add_edge(1, p, report.slack[perm[p - 1] - 1] / Rational(n - 1));
    }
  }
  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= n; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());

  std::ostringstream line;
  line << "star centered at label " << center
       << " (the unique label with slack 0); edge to label k weighs "
       << "slack_k/(n-1)";
  out.trace.push_back(line.str());
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the star equals the input");
  return out;
}

Realization build_caterpillar(const DissimilarityFamily& f, int split,
                              const SteinerOptions& options) {
  const TreeExactCheck check = check_tree_exact(f);
  if (!check.pass || !check.report.slacks_positive ||
      check.report.max_multiplicity < 2) {
    throw PreconditionError(
        "caterpillar needs the strict exact-n conditions: all slacks "
        "positive and the maximum value repeated 2..n-2 times");
  }
  const int n = f.n();
  const int h = check.report.max_multiplicity;  // 2 <= h <= n-2
  if (split < 1 || split > n - h - 1) {
    throw PreconditionError("split must lie in [1, n - multiplicity - 1]");
  }

  Realization out;
  out.permutation = descending_permutation(f);
  const auto& perm = out.permutation;
  auto value_at = [&](int pos) -> const Rational& { return f.at(perm[pos - 1]); };

  // Normalized positions 1..h carry the maximum; the rest hang as leaves.
  Rational tail_sum;
  for (int p = h + 1; p <= n; ++p) tail_sum += value_at(p);
  const Rational path_weight =
      (tail_sum - Rational(n - h - 1) * value_at(1)) / Rational(h - 1);

  WeightedGraph core;
  for (int p = 1; p <= n; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
  }
  for (int p = 1; p < h; ++p) core.add_edge(p, p + 1, path_weight);
  for (int p = h + 1; p <= n; ++p) {
    const VertexId anchor = (p <= h + split) ? 1 : h;
    core.add_edge(anchor, p, value_at(1) - value_at(p));
  }

  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= n; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());

  std::ostringstream line;
  line << "caterpillar: normalization " << permutation_str(perm)
       << ", spine of " << h << " maximum labels with edge weight "
       << path_weight.str() << ", " << split
       << " leaf(s) at the first spine end";
  out.trace.push_back(line.str());
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the caterpillar equals the input");
  return out;
}

RealizeOutcome realize_tree(const DissimilarityFamily& f, TreeMode mode,
                            const SteinerOptions& options) {
  RealizeOutcome out;
  switch (mode) {
    case TreeMode::AtLeastNVertices: {
      const TreeCheck check = check_tree_vertices(f);
      if (!check.pass) {
        out.reasons = check.reasons;
        return out;
      }
      if (check.report.equality_labels.size() == 1) {
        out.realization =
            build_star_centered(f, check.report.equality_labels.front(), options);
      } else {
        out.realization = build_star_fresh_center(f, options);
      }
      return out;
    }
    case TreeMode::AtLeastNLeaves: {
      const TreeCheck check = check_tree_leaves(f);
      if (!check.pass) {
        out.reasons = check.reasons;
        return out;
      }
      out.realization = build_star_fresh_center(f, options);
      return out;
    }
    case TreeMode::ExactlyNVertices: {
      const TreeExactCheck check = check_tree_exact(f);
      if (!check.pass) {
        out.reasons = check.reasons;
        return out;
      }
      if (check.report.equality_labels.size() == 1) {
        out.realization =
            build_star_centered(f, check.report.equality_labels.front(), options);
      } else {
        out.realization = build_caterpillar(f, /*split=*/1, options);
      }
      return out;
    }
  }
  throw Error("unknown tree mode");
}

}  // namespace dissim
