#pragma once

#include <string>

#include "dissim/family.hpp"
#include "dissim/graph.hpp"
#include "dissim/realization.hpp"
#include "dissim/steiner.hpp"

namespace dissim {

// JSON document formats. All numbers are carried as exact strings
// ("8.2", "1/3"); decoding never goes through floating point.
//
// graph:       {"n": 3, "external": [1,2,3], "vertices": [1,2,3],
//               "edges": [{"u":1, "v":2, "w":"1"}, ...]}
// family:      {"n": 4, "hat": {"1":"5", "2":"5", "3":"6", "4":"8.2"}}
// vector:      {"n": 3, "k": 2, "entries": [{"subset":[1,2], "value":"1"}, ...]}
// realization: graph fields plus "permutation", "trace", "internal_vertices".

std::string encode_graph(const WeightedGraph& g);
WeightedGraph decode_graph(const std::string& text);

std::string encode_family(const DissimilarityFamily& f);
DissimilarityFamily decode_family(const std::string& text);

std::string encode_vector(const DissimilarityVector& v);

std::string encode_realization(const Realization& r);

// Graphviz rendering: undirected, exact weights as edge labels, external
// vertices drawn with a double circle.
std::string to_dot(const WeightedGraph& g);

}  // namespace dissim
