#include "mapcensus/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mapcensus {
namespace {

std::string table_string(const std::map<int, int>& table) {
  std::string out = "{";
  for (auto it = table.begin(); it != table.end(); ++it) {
    if (it != table.begin()) out += ", ";
    out += std::to_string(it->first) + ": " + std::to_string(it->second);
  }
  return out + "}";
}

Surface parse_surface(const std::string& s) {
  if (s == "sphere") return Surface::Sphere;
  if (s == "plane") return Surface::Plane;
  throw std::invalid_argument("unknown surface '" + s + "'");
}

std::optional<int> lookup(const Expectations& expected, Surface surface, int edges) {
  for (const auto& c : expected.counts) {
    if (c.surface == surface && c.edges == edges) return c.count;
  }
  return std::nullopt;
}

ModeResult run_mode(EquivalenceMode mode, int max_edges, const Expectations& expected, int jobs) {
  ModeResult r;
  r.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  std::map<int, bool> all_match_at;
  for (int e = 1; e <= max_edges; ++e) {
    const auto d = derive_plane(e, mode, jobs);
    r.constructions_agree = r.constructions_agree && constructions_agree(d);
    r.decompositions[e] = decomposition_table(d.sphere);
    r.sweep_stats[e] = d.sphere.stats;
    bool ok = true;
    for (auto [surface, actual] : {std::pair{Surface::Sphere, d.sphere.entries.size()},
                                   std::pair{Surface::Plane, d.by_face_orbits.entries.size()}}) {
      CountRow row{surface, e, static_cast<int>(actual), lookup(expected, surface, e)};
      if (row.expected) {
        ++r.checked;
        if (row.matches()) ++r.matched;
        ok = ok && row.matches();
      }
      r.rows.push_back(row);
    }
    if (auto it = expected.decompositions.find(e); it != expected.decompositions.end()) {
      ++r.checked;
      const bool same = it->second == r.decompositions[e];
      if (same) ++r.matched;
      ok = ok && same;
    }
    all_match_at[e] = ok;
  }
  for (int e = 1; e <= max_edges && all_match_at[e]; ++e) r.consistent_through = e;
  r.pass = r.matched == r.checked && r.constructions_agree;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

Expectations Expectations::published() {
  Expectations x;
  x.counts = {
      {Surface::Sphere, 1, 2},  {Surface::Sphere, 2, 4}, {Surface::Sphere, 4, 26},
      {Surface::Plane, 1, 2},   {Surface::Plane, 2, 6},  {Surface::Plane, 3, 25},
      {Surface::Plane, 4, 55},
  };
  x.decompositions[4] = {{1, 4}, {2, 15}, {3, 7}};
  return x;
}

Expectations Expectations::from_json(const nlohmann::json& j) {
  Expectations x;
  for (const auto& c : j.at("counts")) {
    x.counts.push_back({parse_surface(c.at("surface").get<std::string>()), c.at("edges").get<int>(),
                        c.at("count").get<int>()});
  }
  if (j.contains("decompositions")) {
    for (const auto& [edges, table] : j.at("decompositions").items()) {
      auto& dst = x.decompositions[std::stoi(edges)];
      for (const auto& [orbits, n] : table.items()) dst[std::stoi(orbits)] = n.get<int>();
    }
  }
  return x;
}

const ModeResult& VerificationReport::result(EquivalenceMode mode) const {
  for (const auto& m : modes) {
    if (m.mode == mode) return m;
  }
  throw std::out_of_range("mode not part of this report");
}

VerificationReport verify(int max_edges, const Expectations& expected, int jobs) {
  VerificationReport report;
  report.max_edges = max_edges;
  for (auto mode : {EquivalenceMode::Full, EquivalenceMode::Oriented}) {
    report.modes.push_back(run_mode(mode, max_edges, expected, jobs));
  }
  const auto& full = report.modes[0];
  const auto& oriented = report.modes[1];
  if (full.pass) report.paper_mode = EquivalenceMode::Full;
  else if (oriented.pass) report.paper_mode = EquivalenceMode::Oriented;
  report.closest_mode = oriented.matched > full.matched ? EquivalenceMode::Oriented : EquivalenceMode::Full;
  report.pass = report.paper_mode.has_value();

  for (std::size_t i = 0; i < full.rows.size(); ++i) {
    const auto& a = full.rows[i];
    const auto& b = oriented.rows[i];
    if (a.actual != b.actual) {
      report.mode_differences.push_back(std::string(to_string(a.surface)) + ", " + std::to_string(a.edges) +
                                        " edges: full " + std::to_string(a.actual) + ", oriented " +
                                        std::to_string(b.actual));
    }
  }
  return report;
}

std::string VerificationReport::to_text(const Expectations& expected) const {
  std::ostringstream out;
  char line[128];
  out << "census verification, 1.." << max_edges << " edges\n\n";
  std::snprintf(line, sizeof line, "%-9s %-7s %5s %9s %7s  %s\n", "mode", "surface", "edges", "expected", "actual",
                "status");
  out << line;
  for (const auto& m : modes) {
    for (const auto& r : m.rows) {
      const std::string exp = r.expected ? std::to_string(*r.expected) : "-";
      const char* status = !r.expected ? "derived" : r.matches() ? "ok" : "MISMATCH";
      std::snprintf(line, sizeof line, "%-9s %-7s %5d %9s %7d  %s\n", std::string(to_string(m.mode)).c_str(),
                    std::string(to_string(r.surface)).c_str(), r.edges, exp.c_str(), r.actual, status);
      out << line;
    }
  }

  out << "\nface-orbit decomposition of the sphere catalog (orbits: classes)\n";
  for (const auto& m : modes) {
    for (const auto& [e, table] : m.decompositions) {
      out << "  " << to_string(m.mode) << ", " << e << " edges: " << table_string(table);
      if (auto it = expected.decompositions.find(e); it != expected.decompositions.end()) {
        out << "  expected " << table_string(it->second) << (it->second == table ? "  ok" : "  MISMATCH");
      }
      out << '\n';
    }
  }

  out << "\nrejected rotations per sweep (candidates / disconnected / positive genus / spherical)\n";
  for (const auto& [e, s] : modes.front().sweep_stats) {
    out << "  " << e << " edges: " << s.candidates << " / " << s.disconnected << " / " << s.positive_genus << " / "
        << s.spherical << '\n';
  }

  out << "\nplane catalog constructions agree:";
  for (const auto& m : modes) out << ' ' << to_string(m.mode) << '=' << (m.constructions_agree ? "yes" : "NO");
  out << '\n';

  out << "\nmode comparison: ";
  if (mode_differences.empty()) {
    out << "full and oriented give identical counts\n";
  } else {
    out << "full and oriented differ\n";
    for (const auto& d : mode_differences) out << "  " << d << '\n';
  }

  out << '\n';
  for (const auto& m : modes) {
    out << to_string(m.mode) << ": matches " << m.matched << " of " << m.checked << " expectations, consistent through "
        << m.consistent_through << " edges, " << (m.pass ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line, " (%.3f s)\n", m.seconds);
    out << line;
  }
  if (paper_mode) {
    out << "matching mode: " << to_string(*paper_mode) << '\n';
  } else {
    out << "matching mode: none; closest is " << to_string(closest_mode) << '\n';
  }
  out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_edges"] = max_edges;
  j["pass"] = pass;
  j["paper_mode"] = paper_mode ? nlohmann::ordered_json(to_string(*paper_mode)) : nlohmann::ordered_json(nullptr);
  j["closest_mode"] = to_string(closest_mode);
  j["mode_differences"] = mode_differences;
  auto modes_json = nlohmann::ordered_json::array();
  for (const auto& m : modes) {
    nlohmann::ordered_json mj;
    mj["mode"] = to_string(m.mode);
    mj["pass"] = m.pass;
    mj["matched"] = m.matched;
    mj["checked"] = m.checked;
    mj["consistent_through"] = m.consistent_through;
    mj["constructions_agree"] = m.constructions_agree;
    mj["seconds"] = m.seconds;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : m.rows) {
      rows.push_back({{"surface", to_string(r.surface)},
                      {"edges", r.edges},
                      {"expected", r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json(nullptr)},
                      {"actual", r.actual},
                      {"match", r.matches()}});
    }
    mj["rows"] = std::move(rows);
    nlohmann::ordered_json dec;
    for (const auto& [e, table] : m.decompositions) {
      nlohmann::ordered_json t;
      for (const auto& [k, v] : table) t[std::to_string(k)] = v;
      dec[std::to_string(e)] = std::move(t);
    }
    mj["decompositions"] = std::move(dec);
    modes_json.push_back(std::move(mj));
  }
  j["modes"] = std::move(modes_json);
  return j;
}

}  // namespace mapcensus
