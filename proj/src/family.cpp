#include "dissim/family.hpp"

#include <utility>

#include "dissim/errors.hpp"

namespace dissim {

DissimilarityFamily::DissimilarityFamily(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw Error("family needs at least 3 values, got " +
                std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].positive()) {
      throw Error("family value at label " + std::to_string(i + 1) +
                  " is not positive: " + values_[i].str());
    }
  }
}

DissimilarityFamily permuted(const DissimilarityFamily& f,
                             const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != f.n()) {
    throw Error("permutation size does not match family size");
  }
  std::vector<Rational> out;
  out.reserve(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int label : perm) {
    if (label < 1 || label > f.n() || seen[label - 1]) {
      throw Error("not a permutation of 1..n");
    }
    seen[label - 1] = true;
    out.push_back(f.at(label));
  }
  return DissimilarityFamily(std::move(out));
}

DissimilarityFamily scaled(const DissimilarityFamily& f, const Rational& lambda) {
  if (!lambda.positive()) throw Error("scale factor must be positive");
  std::vector<Rational> out;
  out.reserve(f.values().size());
  for (const Rational& v : f.values()) out.push_back(v * lambda);
  return DissimilarityFamily(std::move(out));
}

ConditionReport analyze(const DissimilarityFamily& f) {
  ConditionReport report;
  const int n = f.n();
  Rational total;
  for (const Rational& v : f.values()) total += v;

  report.slack.reserve(n);
  report.slacks_nonnegative = true;
  report.slacks_positive = true;
  report.max_value = f.at(1);
  for (int i = 1; i <= n; ++i) {
    // sum_{j != i} D_j - (n-2) D_i == total - (n-1) D_i
    Rational s = total - Rational(n - 1) * f.at(i);
    if (s.is_zero()) report.equality_labels.push_back(i);
    if (s.negative()) report.slacks_nonnegative = false;
    if (!s.positive()) report.slacks_positive = false;
    report.slack.push_back(std::move(s));
    if (f.at(i) > report.max_value) report.max_value = f.at(i);
  }
  for (int i = 1; i <= n; ++i) {
    if (f.at(i) == report.max_value) ++report.max_multiplicity;
  }
  return report;
}

}  // namespace dissim
