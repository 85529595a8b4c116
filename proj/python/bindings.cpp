#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "mapcensus/canon.hpp"
#include "mapcensus/catalog_io.hpp"
#include "mapcensus/enumerate.hpp"
#include "mapcensus/morse.hpp"

namespace py = pybind11;
using namespace mapcensus;

namespace {

EquivalenceMode parse_mode(const std::string& mode) {
  if (mode == "full") return EquivalenceMode::Full;
  if (mode == "oriented") return EquivalenceMode::Oriented;
  throw py::value_error("mode must be 'full' or 'oriented'");
}

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict summary_dict(const MapSummary& s) {
  py::dict d;
  d["V"] = s.vertices;
  d["E"] = s.edges;
  d["F"] = s.faces;
  d["genus"] = s.genus;
  d["vertex_degrees"] = s.vertex_degrees;
  d["face_degrees"] = s.face_degrees;
  return d;
}

}  // namespace

PYBIND11_MODULE(mapcensus, m) {
  m.doc() = "Census of spherical maps and plane graphs with few edges";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<CombinatorialMap>(m, "CombinatorialMap")
      .def(py::init<std::vector<Dart>>(), py::arg("rotation"))
      .def_static("from_cycles", &CombinatorialMap::from_cycles, py::arg("edge_count"), py::arg("cycles"))
      .def_property_readonly("edge_count", &CombinatorialMap::edge_count)
      .def_property_readonly("rotation", [](const CombinatorialMap& map) {
        return std::vector<Dart>(map.rotation().begin(), map.rotation().end());
      })
      .def("reflected", &CombinatorialMap::reflected)
      .def("relabeled", [](const CombinatorialMap& map, const std::vector<Dart>& relabel) {
        return map.relabeled(relabel);
      })
      .def("vertices", [](const CombinatorialMap& map) { return vertices(map); })
      .def("faces", [](const CombinatorialMap& map) { return faces(map); })
      .def("is_connected", [](const CombinatorialMap& map) { return is_connected(map); })
      .def("genus", [](const CombinatorialMap& map) { return genus(map); })
      .def("summary", [](const CombinatorialMap& map) { return summary_dict(summary(map)); })
      .def("__eq__", [](const CombinatorialMap& a, const CombinatorialMap& b) { return a == b; })
      .def("__repr__", [](const CombinatorialMap& map) {
        return "CombinatorialMap(" + cycle_notation(vertices(map)) + ")";
      });

  m.def(
      "canonical_code_sphere",
      [](const CombinatorialMap& map, const std::string& mode) {
        return canonical_code_sphere(map, parse_mode(mode)).to_string();
      },
      py::arg("map"), py::arg("mode") = "full");

  m.def(
      "canonical_code_plane",
      [](const CombinatorialMap& map, Dart outer_dart, const std::string& mode) {
        return canonical_code_plane(PlaneGraph(map, outer_dart), parse_mode(mode)).to_string();
      },
      py::arg("map"), py::arg("outer_dart"), py::arg("mode") = "full",
      "Canonical code of the plane graph whose outer face contains outer_dart.");

  m.def(
      "automorphism_face_orbits",
      [](const CombinatorialMap& map, const std::string& mode) {
        return automorphism_face_orbits(map, parse_mode(mode));
      },
      py::arg("map"), py::arg("mode") = "full");

  m.def("decode", [](const std::string& code) { return decode_map(CanonicalCode::parse(code)); }, py::arg("code"));
  m.def("is_canonical", [](const std::string& code) {
    try {
      return is_canonical(CanonicalCode::parse(code));
    } catch (const std::invalid_argument&) {
      return false;
    }
  });

  m.def(
      "enumerate",
      [](int edges, const std::string& surface, const std::string& mode, int jobs) {
        const auto m = parse_mode(mode);
        Catalog catalog;
        {
          py::gil_scoped_release release;
          if (surface == "sphere") catalog = enumerate_spherical(edges, m, jobs);
          else if (surface == "plane") catalog = enumerate_plane(edges, m, jobs);
          else throw std::invalid_argument("surface must be 'sphere' or 'plane'");
        }
        return to_python(catalog_to_json(catalog));
      },
      py::arg("edges"), py::arg("surface") = "sphere", py::arg("mode") = "full", py::arg("jobs") = 0,
      "Catalog as a dict with the same schema as `mapcensus enum --format json`.");

  m.def(
      "decomposition_table",
      [](int edges, const std::string& mode, int jobs) {
        py::gil_scoped_release release;
        return decomposition_table(edges, parse_mode(mode), jobs);
      },
      py::arg("edges"), py::arg("mode") = "full", py::arg("jobs") = 0);

  m.def(
      "flow_summary",
      [](const CombinatorialMap& map, Dart outer_dart) {
        const auto f = flow_summary(PlaneGraph(map, outer_dart));
        py::dict d;
        d["sources"] = f.sources;
        d["saddles"] = f.saddles;
        d["sinks"] = f.sinks;
        return d;
      },
      py::arg("map"), py::arg("outer_dart"));

  m.def(
      "flow_structure_count",
      [](int saddles, const std::string& mode, int jobs) {
        py::gil_scoped_release release;
        return flow_structure_count(saddles, parse_mode(mode), jobs);
      },
      py::arg("saddles"), py::arg("mode") = "full", py::arg("jobs") = 0);

  m.attr("MAX_EDGES") = kMaxEdges;
#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
