#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vqn/analysis.hpp"
#include "vqn/automorphism.hpp"
#include "vqn/io.hpp"
#include "vqn/topology.hpp"

namespace py = pybind11;

namespace {

vqn::Label label_from(const std::string& text) {
  return vqn::Label::parse(text);
}

py::dict metrics_dict(const vqn::MetricsReport& report) {
  py::dict d;
  d["n"] = report.n;
  d["diameter"] = report.diameter;
  d["average_distance_num"] = report.average_distance_num;
  d["average_distance_den"] = report.average_distance_den;
  d["average_distance_decimal"] = report.average_distance_decimal;
  d["mode"] = std::string(vqn::to_string(report.mode));
  py::dict profile;
  for (const auto& [ecc, vertices] : report.eccentricity_profile)
    profile[py::int_(ecc)] = vertices;
  d["eccentricity_profile"] = profile;
  return d;
}

}  // namespace

PYBIND11_MODULE(_vqn, m) {
  m.doc() = "varietal hypercube network toolkit";

  py::class_<vqn::Graph>(m, "Graph")
      .def_property_readonly("family",
                             [](const vqn::Graph& g) {
                               return std::string(vqn::to_string(g.family()));
                             })
      .def_property_readonly("dim", &vqn::Graph::dim)
      .def_property_readonly("vertex_count", &vqn::Graph::vertex_count)
      .def_property_readonly("edge_count", &vqn::Graph::edge_count)
      .def("degree", &vqn::Graph::degree, py::arg("v"))
      .def("has_edge", &vqn::Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors_of",
           [](const vqn::Graph& g, std::uint32_t v) {
             const auto span = g.neighbors_of(v);
             return std::vector<std::uint32_t>(span.begin(), span.end());
           },
           py::arg("v"))
      .def("edges", &vqn::Graph::edges)
      .def("__repr__", [](const vqn::Graph& g) {
        return "<Graph " + std::string(vqn::to_string(g.family())) + " " +
               std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<vqn::Automorphism>(m, "Automorphism")
      .def_property_readonly("dim", &vqn::Automorphism::dim)
      .def("apply",
           [](const vqn::Automorphism& a, const std::string& label) {
             return a.apply(label_from(label)).to_string();
           },
           py::arg("label"))
      .def("inverse", &vqn::Automorphism::inverse)
      .def("text", &vqn::Automorphism::to_text)
      .def("table",
           [](const vqn::Automorphism& a) { return a.to_table(); })
      .def("__repr__", [](const vqn::Automorphism& a) {
        return "<Automorphism " + a.to_text() + ">";
      });

  m.def("build_vq", &vqn::build_recursive, py::arg("n"),
        py::arg("size_cap") = vqn::kDefaultSizeCap,
        "varietal hypercube VQ_n by the recursive construction");
  m.def("build_hypercube", &vqn::build_hypercube, py::arg("n"),
        py::arg("size_cap") = vqn::kDefaultSizeCap);
  m.def("build_circulant", &vqn::build_circulant, py::arg("m"),
        py::arg("connection"));

  m.def("dimension_neighbor",
        [](const std::string& label, int d) {
          return vqn::dimension_neighbor(label_from(label), d).to_string();
        },
        py::arg("label"), py::arg("d"));
  m.def("neighbors", [](const std::string& label) {
    std::vector<std::string> out;
    for (const vqn::Label& l : vqn::neighbors(label_from(label)))
      out.push_back(l.to_string());
    return out;
  });
  m.def("classify_edge",
        [](const std::string& x, const std::string& y)
            -> std::optional<std::pair<int, std::string>> {
          const auto cls = vqn::classify_edge(label_from(x), label_from(y));
          if (!cls) return std::nullopt;
          return std::make_pair(cls->dimension,
                                std::string(vqn::to_string(cls->kind)));
        },
        py::arg("x"), py::arg("y"));

  m.def("edge_list", &vqn::to_edge_list);
  m.def("dot", &vqn::to_dot);

  m.def("identity", &vqn::Automorphism::identity, py::arg("n"));
  m.def("sigma1", &vqn::Automorphism::sigma1, py::arg("n"));
  m.def("phi_lift", &vqn::Automorphism::phi_lift, py::arg("index"),
        py::arg("inner"), py::arg("n"));
  m.def("sigma0",
        py::overload_cast<int, const vqn::Automorphism&,
                          const vqn::Automorphism&>(
            &vqn::Automorphism::sigma0),
        py::arg("n"), py::arg("half0"), py::arg("half1"));
  m.def("sigma0_unchecked", &vqn::Automorphism::sigma0_unchecked,
        py::arg("n"), py::arg("half0"), py::arg("half1"));
  m.def("compose", &vqn::compose, py::arg("a"), py::arg("b"));
  m.def("parse_automorphism", [](const std::string& text) {
    return vqn::Automorphism::from_text(text);
  });

  m.def("is_automorphism",
        [](const vqn::Automorphism& a)
            -> std::pair<bool, std::optional<std::string>> {
          const vqn::AutomorphismCheck check = vqn::is_automorphism(a);
          if (check.ok) return {true, std::nullopt};
          return {false, check.describe()};
        },
        py::arg("a"));

  m.def("transport",
        [](const std::string& x, const std::string& y) {
          return vqn::transport(label_from(x), label_from(y));
        },
        py::arg("x"), py::arg("y"));

  m.def("base_automorphism_table", &vqn::base_automorphism_table,
        py::arg("n"));

  m.def("verify_vertex_transitivity",
        [](int n, bool full, int samples, std::uint64_t seed) {
          const vqn::TransitivityReport report =
              full ? vqn::verify_vertex_transitivity(n)
                   : vqn::verify_vertex_transitivity_sampled(n, samples, seed);
          py::dict d;
          d["n"] = report.n;
          d["mode"] = report.full ? "full" : "sampled";
          d["checked"] = report.checked;
          d["passed"] = report.passed;
          d["ok"] = report.ok();
          return d;
        },
        py::arg("n"), py::arg("full") = true,
        py::arg("samples") = vqn::kDefaultSampleCount, py::arg("seed") = 0);

  m.def("metrics",
        [](const vqn::Graph& g, const std::string& mode) {
          const vqn::MetricsMode metrics_mode =
              mode == "all-sources"
                  ? vqn::MetricsMode::all_sources
                  : vqn::MetricsMode::single_source_via_transitivity;
          return metrics_dict(vqn::metrics(g, metrics_mode));
        },
        py::arg("g"), py::arg("mode") = "single-source");

  m.def("bfs_distances", &vqn::bfs_distances, py::arg("g"), py::arg("src"));

  m.def("cycles_through_edge",
        [](const vqn::Graph& g, const std::string& x, const std::string& y,
           int length, int length_cap) {
          return vqn::cycles_through_edge(
              g, static_cast<std::uint32_t>(label_from(x).value),
              static_cast<std::uint32_t>(label_from(y).value), length,
              length_cap);
        },
        py::arg("g"), py::arg("x"), py::arg("y"), py::arg("length"),
        py::arg("length_cap") = vqn::kDefaultCycleLengthCap);

  m.def("refute_edge_transitivity",
        [](int n, int length_cap) {
          const vqn::EdgeTransitivityWitness w =
              vqn::refute_edge_transitivity(n, length_cap);
          py::dict d;
          d["n"] = w.n;
          d["found"] = w.found;
          if (w.found) {
            d["edge_a"] = std::make_pair(w.edge_a.first.to_string(),
                                         w.edge_a.second.to_string());
            d["edge_b"] = std::make_pair(w.edge_b.first.to_string(),
                                         w.edge_b.second.to_string());
            d["cycle_length"] = w.cycle_length;
            d["count_a"] = w.count_a;
            d["count_b"] = w.count_b;
          }
          return d;
        },
        py::arg("n"), py::arg("length_cap") = vqn::kDefaultCycleLengthCap);

  m.def("isomorphic", &vqn::isomorphic_small, py::arg("g"), py::arg("h"));
}
