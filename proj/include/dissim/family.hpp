#pragma once

#include <vector>

#include "dissim/rational.hpp"

namespace dissim {

// A "hat family": n >= 3 positive rationals D_1..D_n, where D_i plays the
// role of the joint dissimilarity of all labels except i.
class DissimilarityFamily {
 public:
  explicit DissimilarityFamily(std::vector<Rational> values);

  int n() const { return static_cast<int>(values_.size()); }
  const Rational& at(int label) const { return values_.at(label - 1); }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const DissimilarityFamily&,
                         const DissimilarityFamily&) = default;

 private:
  std::vector<Rational> values_;
};

// Reindexes by a bijection on labels: position p takes the value of the
// original label perm[p-1].
DissimilarityFamily permuted(const DissimilarityFamily& f,
                             const std::vector<int>& perm);

// Multiplies every value by lambda (> 0).
DissimilarityFamily scaled(const DissimilarityFamily& f, const Rational& lambda);

// Per-label slack of the weighted mean bound, plus tie structure of the
// values. slack[i-1] = sum_{j != i} D_j - (n-2) * D_i. The slack is minimal
// at the largest value, so all signs questions reduce to these numbers.
struct ConditionReport {
  std::vector<Rational> slack;
  std::vector<int> equality_labels;  // labels with slack exactly 0
  Rational max_value;
  int max_multiplicity = 0;
  bool slacks_nonnegative = false;
  bool slacks_positive = false;
};

ConditionReport analyze(const DissimilarityFamily& f);

}  // namespace dissim
