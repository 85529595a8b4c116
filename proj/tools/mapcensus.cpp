// mapcensus: enumerate, verify and inspect catalogs of spherical maps and
// plane graphs with few edges.
//
// Exit codes: 0 success, 1 verification failed, 2 usage, 3 resource guard,
// 4 unknown or invalid code.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mapcensus/canon.hpp"
#include "mapcensus/catalog_io.hpp"
#include "mapcensus/enumerate.hpp"
#include "mapcensus/morse.hpp"
#include "mapcensus/verify.hpp"

namespace {

using namespace mapcensus;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitUnknownCode = 4;

const std::map<std::string, EquivalenceMode> kModes{{"full", EquivalenceMode::Full},
                                                    {"oriented", EquivalenceMode::Oriented}};
const std::map<std::string, Surface> kSurfaces{{"sphere", Surface::Sphere}, {"plane", Surface::Plane}};

struct EnumOptions {
  int edges = 0;
  std::string surface = "sphere";
  std::string mode = "full";
  std::string format = "text";
  std::string out;
  int jobs = 0;
};

struct VerifyOptions {
  int max_edges = 4;
  std::string expectations;
  std::string format = "text";
  int jobs = 0;
};

struct ShowOptions {
  std::string code;
  std::string format = "text";
};

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitUsage;
  }
  file << text;
  return 0;
}

int check_edges(int edges) {
  if (edges < 1) {
    std::cerr << "error: edge count must be at least 1\n";
    return kExitUsage;
  }
  if (edges > kMaxEdges) {
    std::cerr << "error: " << edges << " edges exceeds the exhaustive-sweep limit of " << kMaxEdges << '\n';
    return kExitResource;
  }
  return 0;
}

int run_enum(const EnumOptions& o) {
  if (int rc = check_edges(o.edges)) return rc;
  const auto mode = kModes.at(o.mode);
  const auto catalog = kSurfaces.at(o.surface) == Surface::Sphere ? enumerate_spherical(o.edges, mode, o.jobs)
                                                                  : enumerate_plane(o.edges, mode, o.jobs);
  std::string text;
  if (o.format == "json") text = catalog_to_json(catalog).dump(2) + "\n";
  else if (o.format == "dot") text = catalog_to_dot(catalog);
  else text = catalog_to_text(catalog);
  return write_output(o.out, text);
}

int run_verify(const VerifyOptions& o) {
  if (int rc = check_edges(o.max_edges)) return rc;
  auto expected = Expectations::published();
  if (!o.expectations.empty()) {
    std::ifstream file(o.expectations);
    if (!file) {
      std::cerr << "error: cannot read expectations file '" << o.expectations << "'\n";
      return kExitUsage;
    }
    try {
      expected = Expectations::from_json(nlohmann::json::parse(file));
    } catch (const std::exception& e) {
      std::cerr << "error: bad expectations file: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  const auto report = verify(o.max_edges, expected, o.jobs);
  if (o.format == "json") std::cout << report.to_json().dump(2) << '\n';
  else std::cout << report.to_text(expected);
  return report.pass ? 0 : kExitFail;
}

void print_map(std::ostream& out, const CombinatorialMap& map) {
  out << "sigma:  " << cycle_notation(vertices(map)) << '\n';
  out << "alpha:  " << cycle_notation(edges(map)) << '\n';
  out << "faces:  " << cycle_notation(faces(map)) << '\n';
  const auto s = summary(map);
  out << "V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << " genus=" << s.genus << '\n';
  out << "vertex degrees:";
  for (int d : s.vertex_degrees) out << ' ' << d;
  out << "\nface degrees:";
  for (int d : s.face_degrees) out << ' ' << d;
  out << '\n';
}

void print_flow(std::ostream& out, const FlowSummary& f) {
  out << "sources " << f.sources << ", saddles " << f.saddles << ", sinks " << f.sinks << " ("
      << f.sources << " - " << f.saddles << " + " << f.sinks << " = " << f.sources - f.saddles + f.sinks << ")\n";
}

int run_show(const ShowOptions& o) {
  CanonicalCode code;
  try {
    code = CanonicalCode::parse(o.code);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknownCode;
  }
  if (code.edge_count > kMaxEdges || !is_canonical(code)) {
    std::cerr << "error: '" << o.code << "' is not the canonical code of any map\n";
    return kExitUnknownCode;
  }

  const auto map = decode_map(code);
  CatalogEntry entry{.code = code, .summary = summary(map), .representative = map};
  std::optional<PlaneGraph> plane;
  if (code.rooting == Rooting::Plane) {
    plane.emplace(map, 0);
    entry.outer_face = plane->outer_face_index();
    entry.flow = flow_summary(*plane);
  }
  const auto orbits = automorphism_face_orbits(map, code.mode);

  if (o.format == "dot") {
    Catalog single{.edge_count = code.edge_count, .surface = code.rooting, .mode = code.mode, .entries = {entry},
                   .stats = {}};
    std::cout << catalog_to_dot(single);
    return 0;
  }

  std::cout << "code:   " << code.to_string() << '\n';
  std::cout << "kind:   " << to_string(code.rooting) << ", " << to_string(code.mode) << " equivalence\n";
  print_map(std::cout, map);
  std::cout << "automorphisms: " << automorphisms(map, code.mode).size() << '\n';
  std::cout << "face orbits (" << orbits.size() << "):";
  for (const auto& orbit : orbits) {
    std::cout << " {";
    for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? " " : "") << orbit[i];
    std::cout << '}';
  }
  std::cout << '\n';
  if (plane) {
    std::cout << "outer face: " << cycle_notation({plane->outer_face()}) << " (index " << *entry.outer_face << ")\n";
    std::cout << "flow: ";
    print_flow(std::cout, *entry.flow);
  } else {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto rooted = PlaneGraph::with_outer_face_index(map, orbits[i].front());
      std::cout << "flow with outer face " << orbits[i].front() << " ("
                << canonical_code_plane(rooted, code.mode).to_string() << "): ";
      print_flow(std::cout, flow_summary(rooted));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of spherical maps and plane graphs with few edges"};
  app.require_subcommand(1);

  EnumOptions enum_opts;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate a catalog");
  enum_cmd->add_option("--edges", enum_opts.edges, "Number of edges")->required();
  enum_cmd->add_option("--surface", enum_opts.surface, "sphere or plane")->check(CLI::IsMember({"sphere", "plane"}));
  enum_cmd->add_option("--mode", enum_opts.mode, "oriented or full")->check(CLI::IsMember({"oriented", "full"}));
  enum_cmd->add_option("--format", enum_opts.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  enum_cmd->add_option("--out", enum_opts.out, "Output path (default standard output)");
  enum_cmd->add_option("--jobs", enum_opts.jobs, "Worker threads (default all cores)")->check(CLI::NonNegativeNumber);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check catalog sizes against the published counts");
  verify_cmd->add_option("--max-edges", verify_opts.max_edges, "Largest edge count to check")->capture_default_str();
  verify_cmd->add_option("--expectations", verify_opts.expectations, "JSON file replacing the built-in counts");
  verify_cmd->add_option("--format", verify_opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--jobs", verify_opts.jobs, "Worker threads (default all cores)")
      ->check(CLI::NonNegativeNumber);

  ShowOptions show_opts;
  auto* show_cmd = app.add_subcommand("show", "Describe the class with a given canonical code");
  show_cmd->add_option("code", show_opts.code, "Canonical code string")->required();
  show_cmd->add_option("--format", show_opts.format, "text or dot")->check(CLI::IsMember({"text", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enum_cmd) return run_enum(enum_opts);
    if (*verify_cmd) return run_verify(verify_opts);
    return run_show(show_opts);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
