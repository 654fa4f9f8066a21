#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "dissim/family.hpp"

namespace dissim {

// The five realizability classes a generated family can be asked to satisfy,
// plus None for families rejected by every applicable class.
enum class FamilyClass {
  TreeVertices,
  TreeLeaves,
  TreeExact,
  GraphExact,
  GraphInternalN4,
  None,
};

FamilyClass family_class_from_string(std::string_view name);
std::string to_string(FamilyClass cls);

// True when the family passes the checker of the class (for None: fails
// every class that applies at its size).
bool family_matches_class(const DissimilarityFamily& f, FamilyClass cls);

struct GenOptions {
  int numerator_min = 1;
  int numerator_max = 1000;
  long denominator = 10;
  int max_attempts = 10000;
};

// Uniform integer draw from [lo, hi] driven by the mt19937_64 stream alone,
// so results are identical across platforms.
std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t lo,
                           std::uint64_t hi);

// Rejection-samples families with numerator/denominator entries until one
// matches the class. Throws Error after max_attempts rejections.
DissimilarityFamily generate_family(int n, FamilyClass cls,
                                    std::mt19937_64& rng,
                                    const GenOptions& options = {});

}  // namespace dissim
