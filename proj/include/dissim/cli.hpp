#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissim {

// Entry point of the command-line tool. Subcommands:
//   weights  --k K GRAPH        joint dissimilarities of all k-subsets
//   check    FAMILY             realizability verdict for all five classes
//   realize  --class C FAMILY   construct and verify a witness graph
//   verify   FAMILY GRAPH       exact hat-family comparison
//   gen      --n N --class C    seeded random families of a class
//
// Exit codes: 0 success; 1 failed check/verify; 2 family not realizable;
// 64 parse/usage errors; 65 domain errors (disconnected graph, wrong n,
// violated precondition, size caps); 70 internal verification failures.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace dissim
