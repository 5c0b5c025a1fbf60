#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "covertool/ass_analysis.hpp"
#include "covertool/cover_ideals.hpp"
#include "covertool/error.hpp"
#include "covertool/hypergraph_ext.hpp"
#include "covertool/report_json.hpp"
#include "covertool/text_format.hpp"

namespace py = pybind11;
using namespace covertool;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<VertexList> prime_labels(const std::vector<MonomialPrime>& primes, const Ambient& ambient) {
  std::vector<VertexList> out;
  for (const auto& p : primes) out.push_back(p.labels(ambient));
  return out;
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(g.to_string(ideal.ambient()));
  return out;
}

AssMode parse_mode(const std::string& mode) {
  if (mode == "direct") return AssMode::kDirect;
  if (mode == "localized") return AssMode::kLocalized;
  throw Error("mode must be 'direct' or 'localized'");
}

}  // namespace

PYBIND11_MODULE(_covertool, m) {
  m.doc() = "Partial t-cover ideals of graphs and the associated primes of their powers";
  py::register_exception<Error>(m, "CovertoolError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>(),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
                               return out;
                             })
      .def("degree", [](const Graph& g, const std::string& v) { return g.degree(g.index_of(v)); })
      .def("is_tree", [](const Graph& g) { return is_tree(g); })
      .def("max_degree", [](const Graph& g) { return max_degree(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__str__", [](const Graph& g) {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
      });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::vector<std::string>, const std::vector<std::vector<std::string>>&>(), py::arg("vertices"),
           py::arg("edges"))
      .def_property_readonly("vertices", &Hypergraph::vertices)
      .def_property_readonly("edges", [](const Hypergraph& h) {
        std::vector<VertexList> out;
        for (const auto& e : h.edges()) {
          VertexList labels;
          for (auto v : e) labels.push_back(h.vertices()[v]);
          out.push_back(std::move(labels));
        }
        return out;
      });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init([](const std::vector<std::string>& variables, const std::vector<std::string>& generators) {
             Ambient ambient(variables);
             std::vector<Monomial> gens;
             for (const auto& g : generators) gens.push_back(parse_monomial(ambient, g));
             return MonomialIdeal(ambient, gens);
           }),
           py::arg("variables"), py::arg("generators"))
      .def_property_readonly("variables", [](const MonomialIdeal& i) { return i.ambient().names(); })
      .def_property_readonly("generators", &generator_strings)
      .def("is_unit", &MonomialIdeal::is_unit)
      .def("contains", [](const MonomialIdeal& i, const std::string& mono) {
        return i.contains(parse_monomial(i.ambient(), mono));
      })
      .def("__mul__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_product(a, b); })
      .def("__pow__", [](const MonomialIdeal& a, std::size_t s) { return ideal_power(a, s); })
      .def("__and__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_intersection(a, b); })
      .def("__add__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_sum(a, b); })
      .def("colon", [](const MonomialIdeal& i, const std::string& mono) {
        return colon(i, parse_monomial(i.ambient(), mono));
      })
      .def("associated_primes",
           [](const MonomialIdeal& i) { return prime_labels(associated_primes(i), i.ambient()); })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__str__", &MonomialIdeal::to_string)
      .def("__repr__", [](const MonomialIdeal& i) { return "MonomialIdeal(" + i.to_string() + ")"; });

  m.def("parse_graph", [](const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
  });
  m.def("parse_hypergraph", [](const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
  });
  m.def("star_graph", &star_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));

  m.def("partial_cover_ideal", &partial_cover_ideal, py::arg("graph"), py::arg("t"));
  m.def("star_generators", &star_generators, py::arg("n"), py::arg("t"));
  m.def("generalized_edge_ideal", &generalized_edge_ideal, py::arg("graph"), py::arg("t"));
  m.def("alexander_dual", &alexander_dual, py::arg("ideal"));

  m.def(
      "ass_of_power",
      [](const Graph& g, std::size_t t, std::size_t s, const std::string& mode) {
        const auto report = ass_of_power(g, t, s, parse_mode(mode));
        return prime_labels(report.primes, report.ambient());
      },
      py::arg("graph"), py::arg("t"), py::arg("s"), py::arg("mode") = "direct");
  m.def(
      "predict_ass_star",
      [](std::size_t n, std::size_t t, std::size_t s) {
        const auto report = predict_ass_star(n, t, s);
        return prime_labels(report.primes, report.ambient());
      },
      py::arg("n"), py::arg("t"), py::arg("s"));
  m.def(
      "predict_ass_tree",
      [](const Graph& g, std::size_t t, std::size_t s) {
        const auto report = predict_ass_tree(g, t, s);
        return prime_labels(report.primes, report.ambient());
      },
      py::arg("graph"), py::arg("t"), py::arg("s"));
  m.def("max_ideal_in_ass_star", &max_ideal_in_ass_star, py::arg("n"), py::arg("t"), py::arg("s"));
  m.def("astab_tree", &astab_tree, py::arg("graph"), py::arg("t"));
  m.def("astab_star", &astab_star, py::arg("n"), py::arg("t"));
  m.def(
      "graph_stability",
      [](const Graph& g, std::size_t t, std::size_t s_max) { return to_python(to_json(graph_stability(g, t, s_max), g, t)); },
      py::arg("graph"), py::arg("t"), py::arg("s_max"));
  m.def(
      "star_witness", [](std::size_t n, std::size_t t, std::size_t s) { return to_python(to_json(build_star_witness(n, t, s))); },
      py::arg("n"), py::arg("t"), py::arg("s"));

  m.def("hypergraph_cover_ideal", &hypergraph_cover_ideal, py::arg("hypergraph"));
  m.def("chromatic_number", &chromatic_number, py::arg("hypergraph"));
  m.def("build_gap_family", &build_gap_family, py::arg("m"));
  m.def(
      "verify_gap", [](std::size_t m, bool force) { return to_python(to_json(verify_gap(m, std::nullopt, force))); },
      py::arg("m"), py::arg("force") = false);
}
