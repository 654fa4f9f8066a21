// Python bindings for the dissimilarity library. Rationals cross the
// boundary as fractions.Fraction (exact in both directions); graphs are a
// thin wrapper class; realizations become plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "dissim/errors.hpp"
#include "dissim/generate.hpp"
#include "dissim/graph_realize.hpp"
#include "dissim/json_io.hpp"
#include "dissim/steiner.hpp"
#include "dissim/tree_realize.hpp"

namespace py = pybind11;
using namespace dissim;

namespace {

Rational to_rational(py::handle value) {
  if (py::isinstance<py::float_>(value)) {
    throw py::type_error("weights must be exact: pass int, str or Fraction, "
                         "not float");
  }
  if (py::isinstance<py::int_>(value)) {
    return Rational::from_string(py::str(value).cast<std::string>());
  }
  if (py::isinstance<py::str>(value)) {
    return Rational::from_string(value.cast<std::string>());
  }
  // Fraction (or anything with numerator/denominator).
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    const std::string num = py::str(value.attr("numerator")).cast<std::string>();
    const std::string den = py::str(value.attr("denominator")).cast<std::string>();
    return Rational::from_string(num + "/" + den);
  }
  throw py::type_error("cannot interpret value as an exact rational");
}

py::object to_fraction(const Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(r.fraction_str());
}

DissimilarityFamily to_family(const py::sequence& values) {
  std::vector<Rational> out;
  out.reserve(py::len(values));
  for (py::handle v : values) out.push_back(to_rational(v));
  return DissimilarityFamily(std::move(out));
}

py::list from_family(const DissimilarityFamily& f) {
  py::list out;
  for (const Rational& v : f.values()) out.append(to_fraction(v));
  return out;
}

py::tuple steiner_to_py(const SteinerResult& r) {
  py::list witness;
  for (const EdgeKey& e : r.witness) {
    witness.append(py::make_tuple(e.first, e.second));
  }
  return py::make_tuple(to_fraction(r.weight), witness);
}

py::dict outcome_to_py(const RealizeOutcome& outcome) {
  py::dict out;
  out["ok"] = outcome.ok();
  out["reasons"] = outcome.reasons;
  if (outcome.ok()) {
    const Realization& r = *outcome.realization;
    out["graph"] = r.graph;
    out["permutation"] = r.permutation;
    out["trace"] = r.trace;
    out["internal_vertices"] = r.internal_vertices();
  }
  return out;
}

py::dict report_to_py(const ConditionReport& report) {
  py::dict out;
  py::list slack;
  for (const Rational& s : report.slack) slack.append(to_fraction(s));
  out["slack"] = slack;
  out["equality_labels"] = report.equality_labels;
  out["max_value"] = to_fraction(report.max_value);
  out["max_multiplicity"] = report.max_multiplicity;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact dissimilarity weights of positive-weighted graphs";

  // Translators run most-recent-first, so the base class goes in first.
  py::register_exception<Error>(m, "DissimError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init<>())
      .def("add_vertex", &WeightedGraph::add_vertex, py::arg("v"))
      .def(
          "add_edge",
          [](WeightedGraph& g, VertexId u, VertexId v, py::handle w) {
            if (!g.add_edge(u, v, to_rational(w))) {
              throw py::value_error("edge already present");
            }
          },
          py::arg("u"), py::arg("v"), py::arg("w"))
      .def_property(
          "external",
          [](const WeightedGraph& g) { return g.external; },
          [](WeightedGraph& g, std::vector<VertexId> ext) {
            g.external = std::move(ext);
          })
      .def_property_readonly(
          "vertices",
          [](const WeightedGraph& g) {
            return std::vector<VertexId>(g.vertices.begin(), g.vertices.end());
          })
      .def_property_readonly(
          "edges",
          [](const WeightedGraph& g) {
            py::list out;
            for (const auto& [key, w] : g.edges) {
              out.append(py::make_tuple(key.first, key.second, to_fraction(w)));
            }
            return out;
          })
      .def("__eq__",
           [](const WeightedGraph& a, const WeightedGraph& b) { return a == b; })
      .def("__repr__", [](const WeightedGraph& g) {
        std::ostringstream out;
        out << "Graph(" << g.vertices.size() << " vertices, "
            << g.edges.size() << " edges, n=" << g.n_external() << ")";
        return out.str();
      });

  m.def("graph_from_json", [](const std::string& text) {
    return decode_graph(text);
  });
  m.def("graph_to_json", [](const WeightedGraph& g) { return encode_graph(g); });
  m.def("graph_to_dot", [](const WeightedGraph& g) { return to_dot(g); });
  m.def("validate_graph", [](const WeightedGraph& g) {
    const Validation v = validate(g);
    return py::make_tuple(v.ok(), v.message);
  });

  m.def(
      "steiner_weight",
      [](const WeightedGraph& g, const std::vector<VertexId>& terminals) {
        return steiner_to_py(steiner_weight(g, terminals));
      },
      py::arg("graph"), py::arg("terminals"),
      "minimum weight of a connected subgraph containing the terminals, "
      "with a witness edge list");
  m.def(
      "steiner_brute",
      [](const WeightedGraph& g, const std::vector<VertexId>& terminals) {
        return steiner_to_py(steiner_brute(g, terminals));
      },
      py::arg("graph"), py::arg("terminals"),
      "reference minimizer enumerating vertex supersets (exponential)");

  m.def(
      "dissimilarity_vector",
      [](const WeightedGraph& g, int k) {
        py::dict out;
        for (const auto& [subset, value] : dissimilarity_vector(g, k).entries) {
          out[py::tuple(py::cast(subset))] = to_fraction(value);
        }
        return out;
      },
      py::arg("graph"), py::arg("k"));
  m.def(
      "hat_vector",
      [](const WeightedGraph& g) { return from_family(hat_vector(g)); },
      py::arg("graph"));

  m.def("family_to_json", [](const py::sequence& values) {
    return encode_family(to_family(values));
  });
  m.def("family_from_json", [](const std::string& text) {
    return from_family(decode_family(text));
  });

  m.def("check_tree_vertices", [](const py::sequence& values) {
    const TreeCheck c = check_tree_vertices(to_family(values));
    py::dict out = report_to_py(c.report);
    out["pass"] = c.pass;
    out["reasons"] = c.reasons;
    return out;
  });
  m.def("check_tree_leaves", [](const py::sequence& values) {
    const TreeCheck c = check_tree_leaves(to_family(values));
    py::dict out = report_to_py(c.report);
    out["pass"] = c.pass;
    out["reasons"] = c.reasons;
    return out;
  });
  m.def("check_tree_exact", [](const py::sequence& values) {
    const TreeExactCheck c = check_tree_exact(to_family(values));
    py::dict out = report_to_py(c.report);
    out["pass"] = c.pass;
    out["reasons"] = c.reasons;
    out["bound_ok"] = c.bound_ok;
    out["tie_ok"] = c.tie_ok;
    out["spread_ok"] = c.spread_ok;
    return out;
  });
  m.def("check_graph_exact", [](const py::sequence& values) {
    const GraphCheck c = check_graph_exact(to_family(values));
    py::dict out = report_to_py(c.report);
    out["pass"] = c.pass;
    out["reasons"] = c.reasons;
    return out;
  });
  m.def("check_n4_internal", [](const py::sequence& values) {
    const InternalN4Check c = check_internal_n4(to_family(values));
    py::dict out;
    out["pass"] = c.pass;
    out["weighted_ok"] = c.weighted_ok;
    out["triangles_ok"] = c.triangles_ok;
    out["reasons"] = c.reasons;
    return out;
  });
  m.def(
      "implied_subset_inequalities",
      [](const py::sequence& values, int k) {
        return implied_subset_inequalities(to_family(values), k);
      },
      py::arg("values"), py::arg("k"));

  m.def(
      "realize_tree",
      [](const py::sequence& values, const std::string& mode) {
        TreeMode m_;
        if (mode == "tree-vertices") m_ = TreeMode::AtLeastNVertices;
        else if (mode == "tree-leaves") m_ = TreeMode::AtLeastNLeaves;
        else if (mode == "tree-exact") m_ = TreeMode::ExactlyNVertices;
        else throw py::value_error("mode must be tree-vertices, tree-leaves "
                                   "or tree-exact");
        return outcome_to_py(realize_tree(to_family(values), m_));
      },
      py::arg("values"), py::arg("mode"));
  m.def(
      "realize_graph",
      [](const py::sequence& values, const std::string& mode) {
        GraphMode m_;
        if (mode == "graph-exact") m_ = GraphMode::ExactlyNVertices;
        else if (mode == "graph-n4-internal") m_ = GraphMode::InternalN4;
        else throw py::value_error("mode must be graph-exact or "
                                   "graph-n4-internal");
        return outcome_to_py(realize_graph(to_family(values), m_));
      },
      py::arg("values"), py::arg("mode"));

  m.def(
      "verify_family",
      [](const WeightedGraph& g, const py::sequence& values) {
        return hat_vector(g) == to_family(values);
      },
      py::arg("graph"), py::arg("values"),
      "True iff the graph's hat family equals the values exactly");

  m.def(
      "generate_family",
      [](int n, const std::string& cls, std::uint64_t seed, int count) {
        std::mt19937_64 rng(seed);
        const FamilyClass c = family_class_from_string(cls);
        py::list out;
        for (int i = 0; i < count; ++i) {
          out.append(from_family(generate_family(n, c, rng)));
        }
        return out;
      },
      py::arg("n"), py::arg("cls"), py::arg("seed") = 0, py::arg("count") = 1);
}
