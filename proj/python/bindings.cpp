#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdg/domination.hpp"
#include "zdg/error.hpp"
#include "zdg/export.hpp"
#include "zdg/girth.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"
#include "zdg/spectrum.hpp"
#include "zdg/table.hpp"
#include "zdg/verification.hpp"

namespace py = pybind11;
using namespace zdg;

namespace {

// Python side names coordinates 1..k.
Support to_support(const std::vector<int>& idx) {
  Support s;
  for (int i : idx) {
    if (i < 1 || i > 32) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
    s = s.with(i - 1);
  }
  return s;
}

std::vector<int> from_support(Support s) {
  std::vector<int> out;
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

VertexRef vertex(const Graph& G, const std::vector<int>& support, std::uint64_t copy) {
  const auto c = G.class_of(to_support(support));
  if (!c) throw Error(ErrorKind::InvalidArgument, "support is not a vertex class");
  const VertexRef v{*c, copy};
  if (!G.contains(v)) throw Error(ErrorKind::InvalidArgument, "copy index out of range");
  return v;
}

GraphKind kind_of(const std::string& s) {
  if (s == "gamma") return GraphKind::Gamma;
  if (s == "ag") return GraphKind::AnnihilatingIdeal;
  throw Error(ErrorKind::InvalidArgument, "unknown graph '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-divisor and annihilating-ideal graphs of finite reduced rings";
  m.attr("__version__") = ZDG_VERSION;

  py::register_exception<Error>(m, "ZdgError", PyExc_ValueError);

  py::class_<Ring>(m, "Ring")
      .def_property_readonly("k", &Ring::k)
      .def_property_readonly("factors", [](const Ring& R) {
        return std::vector<std::uint32_t>(R.factors().begin(), R.factors().end());
      })
      .def_property_readonly("order", &Ring::order)
      .def("describe", &Ring::describe)
      .def("__repr__", [](const Ring& R) { return "<Ring " + R.describe() + ">"; })
      .def("min_primes", [](const Ring& R) {
        std::vector<std::string> out;
        for (const auto& p : min_primes(R)) out.push_back(R.ideal_label(p.ideal));
        return out;
      })
      .def("bourbaki", [](const Ring& R) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& b : bourbaki(R)) out.emplace_back(R.ideal_label(b.prime.ideal), R.label(b.witness));
        return out;
      })
      .def("fixed_place", [](const Ring& R) { return to_string(fixed_place_status(R).status); });

  m.def("zn", [](std::uint64_t n) { return build_ring(SquarefreeModulus{n}); }, py::arg("n"));
  m.def("fields", [](std::vector<std::uint32_t> qs) { return build_ring(PrimeFactors{std::move(qs)}); },
        py::arg("primes"));
  m.def("table_from_json", [](const std::string& text) { return decompose_table_ring(table::parse_json(text)); },
        py::arg("text"));

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("kind", [](const Graph& G) { return to_string(G.kind()); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("class_count", &Graph::class_count)
      .def("classes", [](const Graph& G) {
        std::vector<std::pair<std::vector<int>, std::uint64_t>> out;
        for (const auto& c : G.classes()) out.emplace_back(from_support(c.support), c.weight);
        return out;
      })
      .def("adjacent", [](const Graph& G, std::vector<int> a, std::vector<int> b, std::uint64_t ca,
                          std::uint64_t cb) { return G.adjacent(vertex(G, a, ca), vertex(G, b, cb)); },
           py::arg("a"), py::arg("b"), py::arg("copy_a") = 0, py::arg("copy_b") = 0)
      .def("distance", [](const Graph& G, std::vector<int> a, std::vector<int> b, std::uint64_t ca,
                          std::uint64_t cb) { return distance(G, vertex(G, a, ca), vertex(G, b, cb)); },
           py::arg("a"), py::arg("b"), py::arg("copy_a") = 0, py::arg("copy_b") = 0)
      .def("eccentricity", [](const Graph& G, std::vector<int> a) { return eccentricity(G, vertex(G, a, 0)); })
      .def("radius", [](const Graph& G) { return radius(G).radius; })
      .def("diameter", [](const Graph& G) { return diameter(G); })
      .def("girth_through", [](const Graph& G, std::vector<int> a, std::vector<int> b, std::uint64_t ca,
                               std::uint64_t cb) {
        const GirthResult r = girth_through(G, vertex(G, a, ca), vertex(G, b, cb));
        return py::make_tuple(r.length, r.certified);
      }, py::arg("a"), py::arg("b"), py::arg("copy_a") = 0, py::arg("copy_b") = 0)
      .def("domination_number", [](const Graph& G, bool total) {
        const DominationResult r = domination(G, total);
        return py::make_tuple(r.size, r.certified);
      }, py::arg("total") = false);

  m.def("gamma", &build_gamma, py::arg("ring"));
  m.def("ag", &build_ag, py::arg("ring"));

  m.def("export_graph", [](const Ring& R, const std::string& graph, const std::string& format, bool compressed) {
    ExportOptions o;
    o.kind = kind_of(graph);
    if (format != "dot" && format != "json") throw Error(ErrorKind::InvalidArgument, "unknown format");
    o.format = format == "dot" ? ExportFormat::Dot : ExportFormat::Json;
    o.compressed = compressed;
    return export_graph(R, o);
  }, py::arg("ring"), py::arg("graph") = "gamma", py::arg("format") = "dot", py::arg("compressed") = false);

  m.def("verify_json", [](const Ring& R, const std::string& suite, std::uint64_t seed, bool canonical) {
    VerifyOptions o;
    o.suite = parse_suite(suite);
    o.seed = seed;
    return report_json(run_verification(R, o), canonical).dump(2);
  }, py::arg("ring"), py::arg("suite") = "all", py::arg("seed") = 0, py::arg("canonical") = false);
}
