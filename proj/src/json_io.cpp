#include "dissim/json_io.hpp"

#include <json.hpp>
#include <sstream>

#include "dissim/errors.hpp"

namespace dissim {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int get_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw ParseError("field '" + field + "' missing or not an integer");
  }
  return j[field].get<int>();
}

Rational get_rational(const json& j, const std::string& context) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) {
    throw ParseError(context + ": weights must be strings such as \"1\", "
                     "\"0.5\" or \"1/3\" (floating point is not accepted)");
  }
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

json graph_body(const WeightedGraph& g) {
  json doc;
  doc["n"] = g.n_external();
  doc["external"] = g.external;
  doc["vertices"] = json::array();
  for (VertexId v : g.vertices) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const auto& [key, w] : g.edges) {
    doc["edges"].push_back({{"u", key.first}, {"v", key.second}, {"w", w.str()}});
  }
  return doc;
}

}  // namespace

std::string encode_graph(const WeightedGraph& g) {
  return graph_body(g).dump();
}

WeightedGraph decode_graph(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");

  WeightedGraph g;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("field 'vertices' missing or not an array");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
    g.add_vertex(v.get<int>());
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("field 'edges' missing or not an array");
  }
  int edge_index = 0;
  for (const auto& e : doc["edges"]) {
    std::ostringstream ctx;
    ctx << "edges[" << edge_index++ << "]";
    if (!e.is_object()) throw ParseError(ctx.str() + " must be an object");
    const int u = get_int(e, "u");
    const int v = get_int(e, "v");
    const Rational w = get_rational(e.contains("w") ? e["w"] : json(), ctx.str());
    if (!g.add_edge(u, v, w)) {
      std::ostringstream msg;
      msg << "DuplicateEdge: " << ctx.str() << " repeats the pair (" << u
          << ", " << v << ")";
      throw ParseError(msg.str());
    }
  }
  if (!doc.contains("external") || !doc["external"].is_array()) {
    throw ParseError("field 'external' missing or not an array");
  }
  for (const auto& v : doc["external"]) {
    if (!v.is_number_integer()) throw ParseError("external ids must be integers");
    g.external.push_back(v.get<int>());
  }
  if (doc.contains("n") && get_int(doc, "n") != g.n_external()) {
    throw ParseError("field 'n' disagrees with the length of 'external'");
  }

  const Validation check = validate(g);
  if (!check.ok()) throw ParseError(check.message);
  return g;
}

std::string encode_family(const DissimilarityFamily& f) {
  json doc;
  doc["n"] = f.n();
  json hat = json::object();
  for (int i = 1; i <= f.n(); ++i) hat[std::to_string(i)] = f.at(i).str();
  doc["hat"] = std::move(hat);
  return doc.dump();
}

DissimilarityFamily decode_family(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("family document must be a JSON object");
  const int n = get_int(doc, "n");
  if (n < 3) throw ParseError("family size n must be at least 3");
  if (!doc.contains("hat") || !doc["hat"].is_object()) {
    throw ParseError("field 'hat' missing or not an object");
  }
  const json& hat = doc["hat"];
  if (static_cast<int>(hat.size()) != n) {
    throw ParseError("'hat' must contain exactly the keys \"1\"..\"n\"");
  }
  std::vector<Rational> values;
  values.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const std::string key = std::to_string(i);
    if (!hat.contains(key)) throw ParseError("'hat' is missing key \"" + key + "\"");
    Rational v = get_rational(hat[key], "hat[\"" + key + "\"]");
    if (!v.positive()) {
      throw ParseError("hat[\"" + key + "\"] must be positive, got " + v.str());
    }
    values.push_back(std::move(v));
  }
  return DissimilarityFamily(std::move(values));
}

std::string encode_vector(const DissimilarityVector& v) {
  json doc;
  doc["n"] = v.n;
  doc["k"] = v.k;
  doc["entries"] = json::array();
  for (const auto& [subset, value] : v.entries) {
    doc["entries"].push_back({{"subset", subset}, {"value", value.str()}});
  }
  return doc.dump();
}

std::string encode_realization(const Realization& r) {
  json doc = graph_body(r.graph);
  doc["permutation"] = r.permutation;
  doc["trace"] = r.trace;
  doc["internal_vertices"] = r.internal_vertices();
  return doc.dump();
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph dissimilarity_witness {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v : g.vertices) {
    out << "  " << v;
    if (g.label_of(v) != 0) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& [key, w] : g.edges) {
    out << "  " << key.first << " -- " << key.second << " [label=\""
        << w.str() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dissim
