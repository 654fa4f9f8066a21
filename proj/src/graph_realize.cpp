#include "dissim/graph_realize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "dissim/errors.hpp"

namespace dissim {

namespace {

std::vector<int> identity_permutation(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
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

std::string values_str(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i].str();
  }
  out << ")";
  return out.str();
}

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

// Positions 1..n of the unique-maximum normalization. The position that a
// value lands on depends only on the sorted values (ties broken by ascending
// label), so relabeling the input never changes the position-space core.
// Position 1 carries the maximum. With the rest sorted descending as
// r1 >= r2 >= ..., n = 4 places (r2, r1, r3) on positions 2..4 and n >= 5
// places (r2, ..., r_{n-1}) on 2..n-1 with r1 last, where the reduction
// peels it off.
std::vector<int> unique_max_permutation(const std::vector<Rational>& values) {
  const int n = static_cast<int>(values.size());
  int max_label = 1;
  for (int i = 2; i <= n; ++i) {
    if (values[i - 1] > values[max_label - 1]) max_label = i;
  }
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i) {
    if (i != max_label) rest.push_back(i);
  }
  std::stable_sort(rest.begin(), rest.end(), [&values](int a, int b) {
    return values[a - 1] > values[b - 1];
  });
  std::vector<int> perm{max_label};
  if (n == 4) {
    perm.push_back(rest[1]);
    perm.push_back(rest[0]);
    perm.push_back(rest[2]);
  } else {
    for (std::size_t i = 1; i < rest.size(); ++i) perm.push_back(rest[i]);
    perm.push_back(rest[0]);
  }
  return perm;
}

// Core of the unique-maximum recursion, working on plain value vectors in
// "position" labels 1..m. Returns a graph on vertices 1..m whose hat family
// is exactly `values`.
WeightedGraph unique_max_core(const std::vector<Rational>& values,
                              InductionTrace* trace,
                              std::vector<std::string>* log) {
  const int m = static_cast<int>(values.size());
  const std::vector<int> perm = unique_max_permutation(values);
  auto value_at = [&](int pos) -> const Rational& {
    return values[perm[pos - 1] - 1];
  };

  WeightedGraph core;
  for (int p = 1; p <= m; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
  }

  if (m == 4) {
    const Rational& d1 = value_at(1);
    const Rational& d2 = value_at(2);
    const Rational& d3 = value_at(3);
    const Rational& d4 = value_at(4);
    const Rational w23 = d1 - d2;
    const Rational w13 = d2 + d4 - d1;
    const Rational w14 = d1 - d4;
    const Rational w12 = d3 + d4 - d1;
    for (const Rational* w : {&w23, &w13, &w14, &w12}) {
      if (!w->positive()) {
        throw VerificationError(
            "unique-maximum base case produced a non-positive weight");
      }
    }
    core.add_edge(2, 3, w23);
    core.add_edge(1, 3, w13);
    core.add_edge(1, 4, w14);
    core.add_edge(1, 2, w12);
    if (log) {
      std::ostringstream line;
      line << "base on 4 labels, normalization " << permutation_str(perm)
           << ": w(2,3)=" << w23.str() << ", w(1,3)=" << w13.str()
           << ", w(1,4)=" << w14.str() << ", w(1,2)=" << w12.str();
      log->push_back(line.str());
    }
  } else {
    const Rational x = value_at(1) - value_at(m);
    if (!x.positive()) {
      throw VerificationError("unique-maximum reduction step needs x > 0");
    }
    std::vector<Rational> reduced;
    reduced.reserve(m - 1);
    reduced.push_back(value_at(m));
    for (int p = 2; p <= m - 1; ++p) reduced.push_back(value_at(p) - x);
    for (std::size_t i = 1; i < reduced.size(); ++i) {
      if (!reduced[i].positive() || reduced[i] >= reduced[0]) {
        throw VerificationError(
            "reduced family must be positive with its unique maximum first");
      }
    }
    if (trace) {
      trace->push_back(InductionLevel{m, perm, x, reduced});
    }
    if (log) {
      std::ostringstream line;
      line << "reduce " << m << " -> " << m - 1 << ", normalization "
           << permutation_str(perm) << ": peel x=" << x.str()
           << ", reduced family " << values_str(reduced);
      log->push_back(line.str());
    }
    const WeightedGraph sub = unique_max_core(reduced, trace, log);
    for (const auto& [key, w] : sub.edges) core.add_edge(key.first, key.second, w);
    core.add_edge(1, m, x);
    if (log) {
      std::ostringstream line;
      line << "attach pendant vertex " << m << " to vertex 1 with weight "
           << x.str();
      log->push_back(line.str());
    }
  }

  // Back to this level's labels. The external list must again be 1..m.
  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= m; ++p) to_original[p] = perm[p - 1];
  WeightedGraph result = relabel(core, to_original);
  std::sort(result.external.begin(), result.external.end());
  return result;
}

}  // namespace

GraphCheck check_graph_exact(const DissimilarityFamily& f) {
  GraphCheck out;
  out.report = analyze(f);
  out.bound_ok = out.report.slacks_nonnegative;
  if (!out.bound_ok) {
    std::ostringstream msg;
    msg << "(n-2)*D[i] must not exceed the sum of the other values; "
           "violated at";
    for (std::size_t i = 0; i < out.report.slack.size(); ++i) {
      if (out.report.slack[i].negative()) {
        msg << " label " << i + 1 << " (slack " << out.report.slack[i].str()
            << ")";
      }
    }
    out.reasons.push_back(msg.str());
  }
  out.tie_strict_ok =
      out.report.max_multiplicity < 2 || out.report.slacks_positive;
  if (!out.tie_strict_ok) {
    out.reasons.push_back(
        "a repeated maximum value requires every slack to be strictly "
        "positive, but some slack is 0");
  }
  out.pass = out.bound_ok && out.tie_strict_ok;
  return out;
}

bool implied_subset_inequalities(const DissimilarityFamily& f, int k) {
  const int n = f.n();
  if (k < 1 || k > n - 2) {
    throw PreconditionError("k must satisfy 1 <= k <= n-2");
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> others;
    others.reserve(n - 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i) others.push_back(f.at(j));
    }
    std::sort(others.begin(), others.end());
    // The k+1 smallest other values give the tightest right-hand side.
    Rational rhs;
    for (int t = 0; t <= k; ++t) rhs += others[t];
    if (Rational(k) * f.at(i) > rhs) return false;
  }
  return true;
}

InternalN4Check check_internal_n4(const DissimilarityFamily& f) {
  if (f.n() != 4) {
    throw WrongNError("internal-vertex realizability is defined for n = 4, got n = " +
                      std::to_string(f.n()));
  }
  InternalN4Check out;
  out.weighted_ok = true;
  out.triangles_ok = true;
  for (int t = 1; t <= 4; ++t) {
    for (int k = 1; k <= 4; ++k) {
      if (k == t) continue;
      for (int j = 1; j <= 4; ++j) {
        if (j == t || j == k) continue;
        const int i = 10 - t - k - j;
        QuintupleTerm term{t, k, j, i,
                           Rational(3) * f.at(k) + Rational(3) * f.at(j) +
                               Rational(2) * f.at(i) - Rational(5) * f.at(t)};
        if (term.margin.negative()) {
          out.weighted_ok = false;
          std::ostringstream msg;
          msg << "5*D[" << t << "] exceeds 3*D[" << k << "] + 3*D[" << j
              << "] + 2*D[" << i << "] by " << (-term.margin).str();
          out.reasons.push_back(msg.str());
        }
        out.quintuples.push_back(std::move(term));
      }
    }
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k <= 4; ++k) {
        if (k == i) continue;
        TriangleTerm term{i, j, k, f.at(j) + f.at(k) - f.at(i)};
        if (!term.margin.positive()) {
          out.triangles_ok = false;
          std::ostringstream msg;
          msg << "strict triangle inequality fails: D[" << i << "] = "
              << f.at(i).str() << " is not below D[" << j << "] + D[" << k
              << "] = " << (f.at(j) + f.at(k)).str();
          out.reasons.push_back(msg.str());
        }
        out.triangles.push_back(std::move(term));
      }
    }
  }
  out.pass = out.weighted_ok && out.triangles_ok;
  return out;
}

Realization build_triangle(const DissimilarityFamily& f,
                           const SteinerOptions& options) {
  if (f.n() != 3) {
    throw WrongNError("triangle construction is defined for n = 3");
  }
  const GraphCheck check = check_graph_exact(f);
  if (!check.pass) {
    throw PreconditionError("triangle needs nonnegative slacks: " +
                            check.reasons.front());
  }
  Realization out;
  // The triangle is label-symmetric; normalizing by descending value keeps
  // the normalized core canonical under relabelings of the input.
  std::vector<int> perm = identity_permutation(3);
  std::stable_sort(perm.begin(), perm.end(), [&f](int a, int b) {
    return f.at(a) > f.at(b);
  });
  out.permutation = perm;
  WeightedGraph core;
  for (int p = 1; p <= 3; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
  }
  // Each edge carries the value of the label it avoids.
  core.add_edge(1, 2, f.at(perm[2]));
  core.add_edge(1, 3, f.at(perm[1]));
  core.add_edge(2, 3, f.at(perm[0]));
  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= 3; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());
  out.trace.push_back(
      "triangle: the edge opposite each label carries that label's value");
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the triangle equals the input");
  return out;
}

Realization build_repeated_max(const DissimilarityFamily& f,
                               const SteinerOptions& options) {
  const int n = f.n();
  const ConditionReport report = analyze(f);
  if (n < 4) {
    throw PreconditionError("repeated-maximum construction needs n >= 4");
  }
  if (report.max_multiplicity < 2 || !report.slacks_positive) {
    throw PreconditionError(
        "repeated-maximum construction needs the maximum value at least "
        "twice and all slacks strictly positive");
  }

  Realization out;
  // Maximum labels first (ascending), the rest ascending.
  std::vector<int> perm = identity_permutation(n);
  std::stable_sort(perm.begin(), perm.end(), [&f](int a, int b) {
    return f.at(a) > f.at(b);
  });
  out.permutation = perm;
  const int k = report.max_multiplicity;
  auto value_at = [&](int pos) -> const Rational& { return f.at(perm[pos - 1]); };

  Rational tail_sum;
  for (int p = k + 1; p <= n; ++p) tail_sum += value_at(p);
  const Rational clique_weight =
      (tail_sum - Rational(n - k - 1) * value_at(1)) / Rational(n - 2);
  if (!clique_weight.positive()) {
    throw VerificationError("repeated-maximum clique weight must be positive");
  }

  WeightedGraph core;
  for (int p = 1; p <= n; ++p) {
    core.add_vertex(p);
    core.external.push_back(p);
  }
  for (int p = 1; p <= k; ++p) {
    for (int q = p + 1; q <= k; ++q) core.add_edge(p, q, clique_weight);
  }
  std::vector<Rational> spokes;
  for (int p = k + 1; p <= n; ++p) {
    const Rational spoke = clique_weight + (value_at(1) - value_at(p));
    core.add_edge(p, 1, spoke);
    core.add_edge(p, k, spoke);
    spokes.push_back(spoke);
  }

  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= n; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());

  std::ostringstream line;
  line << "repeated maximum: normalization " << permutation_str(perm)
       << ", complete graph on the " << k << " maximum labels with edge weight "
       << clique_weight.str();
  if (!spokes.empty()) {
    line << ", spoke weights " << values_str(spokes);
  }
  out.trace.push_back(line.str());
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the graph equals the input");
  return out;
}

Realization build_unique_max(const DissimilarityFamily& f,
                             InductionTrace* trace,
                             const SteinerOptions& options) {
  const int n = f.n();
  const ConditionReport report = analyze(f);
  if (n < 4) {
    throw PreconditionError("unique-maximum construction needs n >= 4");
  }
  if (report.max_multiplicity != 1 || !report.slacks_nonnegative) {
    throw PreconditionError(
        "unique-maximum construction needs a unique maximum value and "
        "nonnegative slacks");
  }

  Realization out;
  out.permutation = unique_max_permutation(f.values());
  out.graph = unique_max_core(f.values(), trace, &out.trace);
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the graph equals the input");
  return out;
}

Realization build_internal_n4(const DissimilarityFamily& f,
                              const SteinerOptions& options) {
  const InternalN4Check check = check_internal_n4(f);
  if (!check.pass) {
    throw PreconditionError("internal-vertex construction rejected: " +
                            check.reasons.front());
  }

  Realization out;
  // Ascending values; ties by ascending label. Position 4 is the largest.
  std::vector<int> perm = identity_permutation(4);
  std::stable_sort(perm.begin(), perm.end(), [&f](int a, int b) {
    return f.at(a) < f.at(b);
  });
  out.permutation = perm;
  auto value_at = [&](int pos) -> const Rational& { return f.at(perm[pos - 1]); };
  const Rational& d1 = value_at(1);
  const Rational& d2 = value_at(2);
  const Rational& d3 = value_at(3);
  const Rational& d4 = value_at(4);

  const Rational h = (d1 + d2 - d4) / Rational(2);
  const Rational r1 = (d4 + d2 + Rational(2) * d3 - Rational(3) * d1) / Rational(4);
  const Rational r2 = (d4 + d1 + Rational(2) * d3 - Rational(3) * d2) / Rational(4);
  const Rational r3 = (d4 + d1 + d2 - Rational(2) * d3) / Rational(4);
  for (const Rational* w : {&h, &r1, &r2, &r3}) {
    if (!w->positive()) {
      throw VerificationError("internal-vertex construction produced a "
                              "non-positive weight");
    }
  }
  if (Rational(2) * h < r3) {
    throw VerificationError("internal-vertex construction needs 2h >= r3");
  }

  // Internal vertices 5, 6, 7 stand beside the labels 1, 2, 3.
  WeightedGraph core;
  for (int v = 1; v <= 7; ++v) core.add_vertex(v);
  for (int p = 1; p <= 4; ++p) core.external.push_back(p);
  const Rational r[3] = {r1, r2, r3};
  for (int i = 1; i <= 3; ++i) {
    core.add_edge(4, 4 + i, h);
    for (int j = 1; j <= 3; ++j) {
      if (j != i) core.add_edge(i, 4 + j, r[i - 1]);
    }
  }

  std::map<VertexId, VertexId> to_original;
  for (int p = 1; p <= 4; ++p) to_original[p] = perm[p - 1];
  out.graph = relabel(core, to_original);
  std::sort(out.graph.external.begin(), out.graph.external.end());

  std::ostringstream line;
  line << "three internal vertices: normalization " << permutation_str(perm)
       << ", h=" << h.str() << ", r=(" << r1.str() << ", " << r2.str()
       << ", " << r3.str() << "), 2h >= r3 holds";
  out.trace.push_back(line.str());
  verify_realization(out, f, options);
  out.trace.push_back("verified: hat family of the graph equals the input");
  return out;
}

RealizeOutcome realize_graph(const DissimilarityFamily& f, GraphMode mode,
                             const SteinerOptions& options) {
  RealizeOutcome out;
  switch (mode) {
    case GraphMode::ExactlyNVertices: {
      const GraphCheck check = check_graph_exact(f);
      if (!check.pass) {
        out.reasons = check.reasons;
        return out;
      }
      if (f.n() == 3) {
        out.realization = build_triangle(f, options);
      } else if (check.report.max_multiplicity >= 2) {
        out.realization = build_repeated_max(f, options);
      } else {
        out.realization = build_unique_max(f, nullptr, options);
      }
      return out;
    }
    case GraphMode::InternalN4: {
      const InternalN4Check check = check_internal_n4(f);
      if (!check.pass) {
        out.reasons = check.reasons;
        return out;
      }
      out.realization = build_internal_n4(f, options);
      return out;
    }
  }
  throw Error("unknown graph mode");
}

}  // namespace dissim
