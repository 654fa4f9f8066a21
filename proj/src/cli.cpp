#include "dissim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dissim/errors.hpp"
#include "dissim/generate.hpp"
#include "dissim/graph_realize.hpp"
#include "dissim/json_io.hpp"
#include "dissim/steiner.hpp"
#include "dissim/tree_realize.hpp"

namespace dissim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

SteinerOptions options_from_env() {
  SteinerOptions options;
  if (const char* cap = std::getenv("DISSIM_TERMINAL_CAP")) {
    try {
      options.terminal_cap = std::stoi(cap);
    } catch (const std::exception&) {
      throw ParseError("DISSIM_TERMINAL_CAP must be an integer, got '" +
                       std::string(cap) + "'");
    }
  }
  return options;
}

// One family document per line, or a single (possibly pretty-printed)
// document covering the whole input.
std::vector<DissimilarityFamily> read_families(const std::string& text) {
  try {
    return {decode_family(text)};
  } catch (const ParseError&) {
    // fall through to line-by-line parsing
  }
  std::vector<DissimilarityFamily> families;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      families.push_back(decode_family(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (families.empty()) throw ParseError("no family documents in input");
  return families;
}

struct ClassVerdict {
  std::string name;
  bool pass = false;
  std::vector<std::string> reasons;
};

std::vector<ClassVerdict> check_all_classes(const DissimilarityFamily& f) {
  std::vector<ClassVerdict> verdicts;
  {
    const TreeCheck c = check_tree_vertices(f);
    verdicts.push_back({"tree-vertices", c.pass, c.reasons});
  }
  {
    const TreeCheck c = check_tree_leaves(f);
    verdicts.push_back({"tree-leaves", c.pass, c.reasons});
  }
  {
    const TreeExactCheck c = check_tree_exact(f);
    verdicts.push_back({"tree-exact", c.pass, c.reasons});
  }
  {
    const GraphCheck c = check_graph_exact(f);
    verdicts.push_back({"graph-exact", c.pass, c.reasons});
  }
  if (f.n() == 4) {
    const InternalN4Check c = check_internal_n4(f);
    verdicts.push_back({"graph-n4-internal", c.pass, c.reasons});
  } else {
    verdicts.push_back({"graph-n4-internal", false,
                        {"requires n = 4, got n = " + std::to_string(f.n())}});
  }
  return verdicts;
}

std::string family_pretty(const DissimilarityFamily& f) {
  std::ostringstream out;
  out << "(";
  for (int i = 1; i <= f.n(); ++i) {
    if (i > 1) out << ", ";
    out << f.at(i).str();
  }
  out << ")";
  return out.str();
}

int cmd_weights(const std::string& path, int k, const std::string& format,
                std::istream& in, std::ostream& out) {
  const WeightedGraph g = decode_graph(read_input(path, in));
  const DissimilarityVector v = dissimilarity_vector(g, k, options_from_env());
  if (format == "pretty") {
    out << "n=" << v.n << " k=" << v.k << "\n";
    for (const auto& [subset, value] : v.entries) {
      out << "D{";
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out << ",";
        out << subset[i];
      }
      out << "} = " << value.str() << "\n";
    }
  } else {
    out << encode_vector(v) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& path, const std::string& format,
              std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<DissimilarityFamily> families =
      read_families(read_input(path, in));
  int passing = 0;
  for (std::size_t idx = 0; idx < families.size(); ++idx) {
    const DissimilarityFamily& f = families[idx];
    const std::vector<ClassVerdict> verdicts = check_all_classes(f);
    const bool any =
        std::any_of(verdicts.begin(), verdicts.end(),
                    [](const ClassVerdict& v) { return v.pass; });
    if (any) ++passing;
    if (format == "pretty") {
      out << "family " << idx + 1 << ": D = " << family_pretty(f) << "\n";
      for (const ClassVerdict& v : verdicts) {
        out << "  " << v.name << ": " << (v.pass ? "pass" : "fail");
        for (const std::string& r : v.reasons) out << "\n    - " << r;
        out << "\n";
      }
    } else {
      ordered_json doc;
      doc["n"] = f.n();
      ordered_json classes = ordered_json::object();
      for (const ClassVerdict& v : verdicts) {
        classes[v.name] = {{"pass", v.pass}, {"reasons", v.reasons}};
      }
      doc["classes"] = std::move(classes);
      doc["pass_any"] = any;
      out << doc.dump() << "\n";
    }
  }
  if (families.size() > 1 || format == "pretty") {
    std::ostream& summary = format == "pretty" ? out : err;
    summary << passing << "/" << families.size()
            << " families pass at least one class\n";
  }
  return passing == static_cast<int>(families.size()) ? 0 : 1;
}

RealizeOutcome realize_for_class(const DissimilarityFamily& f, FamilyClass cls,
                                 const SteinerOptions& options) {
  switch (cls) {
    case FamilyClass::TreeVertices:
      return realize_tree(f, TreeMode::AtLeastNVertices, options);
    case FamilyClass::TreeLeaves:
      return realize_tree(f, TreeMode::AtLeastNLeaves, options);
    case FamilyClass::TreeExact:
      return realize_tree(f, TreeMode::ExactlyNVertices, options);
    case FamilyClass::GraphExact:
      return realize_graph(f, GraphMode::ExactlyNVertices, options);
    case FamilyClass::GraphInternalN4:
      return realize_graph(f, GraphMode::InternalN4, options);
    case FamilyClass::None:
      break;
  }
  throw ParseError("realize needs one of the five realizability classes");
}

void print_realization_pretty(const Realization& r, std::ostream& out) {
  out << "permutation: [";
  for (std::size_t i = 0; i < r.permutation.size(); ++i) {
    if (i) out << ", ";
    out << r.permutation[i];
  }
  out << "]\nvertices:";
  for (VertexId v : r.graph.vertices) out << " " << v;
  out << "\nexternal:";
  for (VertexId v : r.graph.external) out << " " << v;
  out << "\ninternal:";
  for (VertexId v : r.internal_vertices()) out << " " << v;
  out << "\nedges:\n";
  for (const auto& [key, w] : r.graph.edges) {
    out << "  (" << key.first << ", " << key.second << ") w=" << w.str() << "\n";
  }
  out << "trace:\n";
  for (const std::string& line : r.trace) out << "  " << line << "\n";
}

int cmd_realize(const std::string& path, const std::string& cls_name,
                const std::string& dot_path, const std::string& format,
                std::istream& in, std::ostream& out, std::ostream& err) {
  const FamilyClass cls = family_class_from_string(cls_name);
  const DissimilarityFamily f = decode_family(read_input(path, in));
  const RealizeOutcome outcome = realize_for_class(f, cls, options_from_env());
  if (!outcome.ok()) {
    err << "family " << family_pretty(f) << " is not realizable in class "
        << cls_name << ":\n";
    for (const std::string& r : outcome.reasons) err << "  - " << r << "\n";
    return 2;
  }
  const Realization& r = *outcome.realization;
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw Error("cannot write DOT file '" + dot_path + "'");
    dot << to_dot(r.graph);
  }
  if (format == "pretty") {
    out << "class: " << cls_name << "\n";
    print_realization_pretty(r, out);
  } else {
    out << encode_realization(r) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& family_path, const std::string& graph_path,
               std::istream& in, std::ostream& out) {
  const DissimilarityFamily f = decode_family(read_input(family_path, in));
  const WeightedGraph g = decode_graph(read_input(graph_path, in));
  if (g.n_external() != f.n()) {
    throw PreconditionError("graph has " + std::to_string(g.n_external()) +
                            " external labels but the family has n = " +
                            std::to_string(f.n()));
  }
  const DissimilarityFamily actual = hat_vector(g, options_from_env());
  if (actual == f) {
    out << "match: the graph reproduces the family exactly\n";
    return 0;
  }
  out << "mismatch:\n";
  for (int i = 1; i <= f.n(); ++i) {
    if (actual.at(i) != f.at(i)) {
      out << "  label " << i << ": expected " << f.at(i).str() << ", graph gives "
          << actual.at(i).str() << "\n";
    }
  }
  return 1;
}

int cmd_gen(int n, const std::string& cls_name, std::uint64_t seed, int count,
            const std::string& format, std::ostream& out) {
  const FamilyClass cls = family_class_from_string(cls_name);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const DissimilarityFamily f = generate_family(n, cls, rng);
    if (format == "pretty") {
      out << family_pretty(f) << "\n";
    } else {
      out << encode_family(f) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"exact dissimilarity weights of positive-weighted graphs: "
               "compute, check realizability, construct witness graphs"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "json";
  std::string graph_path, family_path, cls_name, dot_path;
  int k = 1, n = 4, count = 1;
  std::uint64_t seed = 0;

  CLI::App* weights = app.add_subcommand(
      "weights", "joint dissimilarities of all k-subsets of external labels");
  weights->add_option("graph", graph_path, "graph document ('-' for stdin)")
      ->required();
  weights->add_option("--k", k, "subset size")->required();
  weights->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  CLI::App* check = app.add_subcommand(
      "check", "realizability verdicts for all five classes");
  check->add_option("family", family_path,
                    "family document or JSONL stream ('-' for stdin)")
      ->required();
  check->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  CLI::App* realize = app.add_subcommand(
      "realize", "construct an oracle-verified witness graph");
  realize->add_option("family", family_path, "family document ('-' for stdin)")
      ->required();
  realize->add_option("--class", cls_name, "realizability class")->required();
  realize->add_option("--dot", dot_path, "also write the witness as Graphviz DOT");
  realize->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "exact comparison of a graph's hat family against a family");
  verify->add_option("family", family_path, "family document")->required();
  verify->add_option("graph", graph_path, "graph document")->required();

  CLI::App* gen = app.add_subcommand(
      "gen", "seeded random families of a realizability class");
  gen->add_option("--n", n, "family size")->required();
  gen->add_option("--class", cls_name, "realizability class or 'none'")
      ->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--count", count, "how many families");
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 64;
  }

  try {
    if (app.got_subcommand(weights)) {
      return cmd_weights(graph_path, k, format, in, out);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(family_path, format, in, out, err);
    }
    if (app.got_subcommand(realize)) {
      return cmd_realize(family_path, cls_name, dot_path, format, in, out, err);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(family_path, graph_path, in, out);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(n, cls_name, seed, count, format, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return 70;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 65;
  }
  return 64;
}

}  // namespace dissim
