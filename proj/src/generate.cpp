#include "dissim/generate.hpp"

#include <utility>

#include "dissim/errors.hpp"
#include "dissim/graph_realize.hpp"
#include "dissim/tree_realize.hpp"

namespace dissim {

FamilyClass family_class_from_string(std::string_view name) {
  if (name == "tree-vertices") return FamilyClass::TreeVertices;
  if (name == "tree-leaves") return FamilyClass::TreeLeaves;
  if (name == "tree-exact") return FamilyClass::TreeExact;
  if (name == "graph-exact") return FamilyClass::GraphExact;
  if (name == "graph-n4-internal") return FamilyClass::GraphInternalN4;
  if (name == "none") return FamilyClass::None;
  throw ParseError("unknown class '" + std::string(name) +
                   "'; expected tree-vertices, tree-leaves, tree-exact, "
                   "graph-exact, graph-n4-internal or none");
}

std::string to_string(FamilyClass cls) {
  switch (cls) {
    case FamilyClass::TreeVertices: return "tree-vertices";
    case FamilyClass::TreeLeaves: return "tree-leaves";
    case FamilyClass::TreeExact: return "tree-exact";
    case FamilyClass::GraphExact: return "graph-exact";
    case FamilyClass::GraphInternalN4: return "graph-n4-internal";
    case FamilyClass::None: return "none";
  }
  return "?";
}

bool family_matches_class(const DissimilarityFamily& f, FamilyClass cls) {
  switch (cls) {
    case FamilyClass::TreeVertices: return check_tree_vertices(f).pass;
    case FamilyClass::TreeLeaves: return check_tree_leaves(f).pass;
    case FamilyClass::TreeExact: return check_tree_exact(f).pass;
    case FamilyClass::GraphExact: return check_graph_exact(f).pass;
    case FamilyClass::GraphInternalN4:
      return f.n() == 4 && check_internal_n4(f).pass;
    case FamilyClass::None:
      return !check_tree_vertices(f).pass && !check_tree_leaves(f).pass &&
             !check_tree_exact(f).pass && !check_graph_exact(f).pass &&
             (f.n() != 4 || !check_internal_n4(f).pass);
  }
  throw Error("unknown family class");
}

std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t lo,
                           std::uint64_t hi) {
  if (lo > hi) throw PreconditionError("draw_uniform: empty range");
  const std::uint64_t range = hi - lo + 1;
  if (range == 0) return rng();  // the full 64-bit range
  // Top of the rejection window; avoids modulo bias without relying on the
  // implementation-defined std::uniform_int_distribution.
  const std::uint64_t limit = range * (UINT64_MAX / range);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + v % range;
}

DissimilarityFamily generate_family(int n, FamilyClass cls,
                                    std::mt19937_64& rng,
                                    const GenOptions& options) {
  if (n < 3) throw PreconditionError("family size must be at least 3");
  if (cls == FamilyClass::GraphInternalN4 && n != 4) {
    throw WrongNError("class graph-n4-internal requires n = 4");
  }
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Rational> values;
    values.reserve(n);
    for (int i = 0; i < n; ++i) {
      const long numerator = static_cast<long>(
          draw_uniform(rng, options.numerator_min, options.numerator_max));
      values.emplace_back(numerator, options.denominator);
    }
    DissimilarityFamily f(std::move(values));
    if (family_matches_class(f, cls)) return f;
  }
  throw Error("no family of class " + to_string(cls) + " with n = " +
              std::to_string(n) + " found in " +
              std::to_string(options.max_attempts) + " attempts");
}

}  // namespace dissim
