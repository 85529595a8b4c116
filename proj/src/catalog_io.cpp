#include "mapcensus/catalog_io.hpp"

#include <sstream>
#include <stdexcept>

namespace mapcensus {
namespace {

std::string join(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace

std::string cycle_notation(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

nlohmann::ordered_json catalog_to_json(const Catalog& catalog) {
  nlohmann::ordered_json root;
  root["edge_count"] = catalog.edge_count;
  root["surface"] = to_string(catalog.surface);
  root["mode"] = to_string(catalog.mode);
  root["total"] = catalog.entries.size();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : catalog.entries) {
    nlohmann::ordered_json j;
    j["code"] = e.code.to_string();
    j["V"] = e.summary.vertices;
    j["E"] = e.summary.edges;
    j["F"] = e.summary.faces;
    j["vertex_degrees"] = e.summary.vertex_degrees;
    j["face_degrees"] = e.summary.face_degrees;
    j["rotation"] = std::vector<Dart>(e.representative.rotation().begin(), e.representative.rotation().end());
    if (catalog.surface == Surface::Sphere) {
      j["face_orbits"] = e.face_orbit_count;
    } else {
      const auto fs = faces(e.representative);
      const auto& outer = fs.at(static_cast<std::size_t>(e.outer_face.value()));
      j["outer_face"] = outer;
      j["outer_face_degree"] = outer.size();
      j["parent_sphere_code"] = e.parent_sphere_code.value().to_string();
      j["face_orbit_index"] = e.face_orbit_index.value();
      const auto& flow = e.flow.value();
      j["flow"] = {{"sources", flow.sources}, {"saddles", flow.saddles}, {"sinks", flow.sinks}};
    }
    entries.push_back(std::move(j));
  }
  root["entries"] = std::move(entries);
  return root;
}

std::string catalog_to_text(const Catalog& catalog) {
  std::ostringstream out;
  int index = 1;
  for (const auto& e : catalog.entries) {
    out << index++ << ' ' << e.code.to_string() << " V=" << e.summary.vertices << " E=" << e.summary.edges
        << " F=" << e.summary.faces << " vdeg=" << join(e.summary.vertex_degrees)
        << " fdeg=" << join(e.summary.face_degrees) << " sigma=" << cycle_notation(vertices(e.representative));
    if (catalog.surface == Surface::Sphere) {
      out << " orbits=" << e.face_orbit_count;
    } else {
      const auto& flow = e.flow.value();
      out << " outer=" << cycle_notation({faces(e.representative).at(static_cast<std::size_t>(*e.outer_face))})
          << " orbit=" << e.face_orbit_index.value() << " parent=" << e.parent_sphere_code.value().to_string()
          << " flow=" << flow.sources << '/' << flow.saddles << '/' << flow.sinks;
    }
    out << '\n';
  }
  return out.str();
}

std::string catalog_to_dot(const Catalog& catalog) {
  std::ostringstream out;
  out << "graph catalog {\n";
  out << "  // " << catalog.entries.size() << ' ' << to_string(catalog.surface) << " graphs, "
      << catalog.edge_count << " edges, " << to_string(catalog.mode) << " equivalence\n";
  int index = 1;
  for (const auto& e : catalog.entries) {
    const auto& map = e.representative;
    const auto vs = vertices(map);
    std::vector<int> vertex_of(static_cast<std::size_t>(map.dart_count()));
    for (std::size_t v = 0; v < vs.size(); ++v) {
      for (Dart d : vs[v]) vertex_of[static_cast<std::size_t>(d)] = static_cast<int>(v);
    }
    const std::string prefix = "g" + std::to_string(index) + "_v";
    out << "  subgraph cluster_" << index << " {\n";
    out << "    label=\"" << index << ": " << e.code.to_string() << "\";\n";
    out << "    // rotation " << cycle_notation(vs) << '\n';
    if (e.outer_face) {
      out << "    // outer face " << cycle_notation({faces(map).at(static_cast<std::size_t>(*e.outer_face))}) << '\n';
    }
    for (std::size_t v = 0; v < vs.size(); ++v) out << "    " << prefix << v << " [label=\"" << v << "\"];\n";
    for (Dart d = 0; d < map.dart_count(); d += 2) {
      out << "    " << prefix << vertex_of[static_cast<std::size_t>(d)] << " -- " << prefix
          << vertex_of[static_cast<std::size_t>(d + 1)] << " [label=\"" << d << '/' << d + 1 << "\"];\n";
    }
    out << "  }\n";
    ++index;
  }
  out << "}\n";
  return out.str();
}

std::vector<ParsedEntry> parse_catalog_json(const std::string& text) {
  const auto root = nlohmann::json::parse(text);
  const auto& entries = root.at("entries");
  if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");
  if (root.at("total").get<std::size_t>() != entries.size()) {
    throw std::invalid_argument("'total' does not match the number of entries");
  }
  std::vector<ParsedEntry> out;
  for (const auto& e : entries) {
    ParsedEntry p;
    p.code = e.at("code").get<std::string>();
    p.rotation = e.at("rotation").get<std::vector<Dart>>();
    if (e.contains("outer_face")) p.outer_face = e.at("outer_face").get<std::vector<Dart>>();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace mapcensus
