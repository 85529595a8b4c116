#include "mapcensus/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>

namespace mapcensus {
namespace {

struct SweepResult {
  SweepStatistics stats;
  std::set<std::vector<int>> sphere_codes;
  std::set<std::vector<int>> plane_codes;
};

void check_edge_count(int edges) {
  if (edges < 1) throw std::invalid_argument("edge count must be at least 1, got " + std::to_string(edges));
  if (edges > kMaxEdges) {
    throw ResourceLimitError("edge count " + std::to_string(edges) + " exceeds the exhaustive-sweep limit of " +
                             std::to_string(kMaxEdges));
  }
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

// The rotation space is split by the images of darts 0 and 1.
std::vector<std::pair<Dart, Dart>> sweep_chunks(int darts) {
  std::vector<std::pair<Dart, Dart>> out;
  for (Dart a = 0; a < darts; ++a) {
    for (Dart b = 0; b < darts; ++b) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

template <class Visit>
void for_each_rotation(int darts, std::pair<Dart, Dart> prefix, Visit&& visit) {
  std::vector<Dart> perm{prefix.first, prefix.second};
  for (Dart d = 0; d < darts; ++d) {
    if (d != prefix.first && d != prefix.second) perm.push_back(d);
  }
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
}

enum class Shape { Disconnected, PositiveGenus, Spherical };

// Allocation-free connectivity and Euler check on a raw rotation.
Shape shape_of(const std::vector<Dart>& rotation) {
  constexpr std::size_t kMaxDarts = 2 * kMaxEdges;
  const std::size_t n = rotation.size();
  std::array<bool, kMaxDarts> seen{};
  std::array<Dart, kMaxDarts> stack{};
  std::size_t top = 0;
  std::size_t reached = 1;
  stack[top++] = 0;
  seen[0] = true;
  while (top > 0) {
    const Dart d = stack[--top];
    for (Dart next : {rotation[static_cast<std::size_t>(d)], CombinatorialMap::alpha(d)}) {
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        stack[top++] = next;
        ++reached;
      }
    }
  }
  if (reached != n) return Shape::Disconnected;

  const auto count_cycles = [n](auto&& step) {
    std::array<bool, kMaxDarts> visited{};
    int cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (visited[start]) continue;
      ++cycles;
      for (auto d = static_cast<Dart>(start); !visited[static_cast<std::size_t>(d)]; d = step(d)) {
        visited[static_cast<std::size_t>(d)] = true;
      }
    }
    return cycles;
  };
  const int v = count_cycles([&](Dart d) { return rotation[static_cast<std::size_t>(d)]; });
  const int f = count_cycles([&](Dart d) { return rotation[static_cast<std::size_t>(CombinatorialMap::alpha(d))]; });
  return v - static_cast<int>(n / 2) + f == 2 ? Shape::Spherical : Shape::PositiveGenus;
}

void classify(const std::vector<Dart>& rotation, EquivalenceMode mode, bool with_plane, SweepResult& out) {
  ++out.stats.candidates;
  switch (shape_of(rotation)) {
    case Shape::Disconnected:
      ++out.stats.disconnected;
      return;
    case Shape::PositiveGenus:
      ++out.stats.positive_genus;
      return;
    case Shape::Spherical:
      break;
  }
  ++out.stats.spherical;
  CombinatorialMap map(rotation);
  if (!with_plane) {
    out.sphere_codes.insert(canonical_code_sphere(map, mode).code);
    return;
  }
  auto codes = all_codes(map, mode);
  out.sphere_codes.insert(std::move(codes.sphere.code));
  for (auto& c : codes.plane_by_face) out.plane_codes.insert(std::move(c.code));
}

SweepResult sweep(int edges, EquivalenceMode mode, int jobs, bool with_plane) {
  check_edge_count(edges);
  const int darts = 2 * edges;
  SweepResult total;
  if (darts == 2) {
    // Too few darts for a two-dart prefix split.
    for (const std::vector<Dart>& rotation : {std::vector<Dart>{0, 1}, std::vector<Dart>{1, 0}}) {
      classify(rotation, mode, with_plane, total);
    }
    return total;
  }

  const auto chunks = sweep_chunks(darts);
  const auto workers = static_cast<std::size_t>(std::min<int>(resolve_jobs(jobs), static_cast<int>(chunks.size())));
  std::vector<SweepResult> partial(workers);
  std::atomic<std::size_t> next_chunk{0};
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (auto c = next_chunk++; c < chunks.size(); c = next_chunk++) {
          for_each_rotation(darts, chunks[c],
                            [&](const std::vector<Dart>& rotation) { classify(rotation, mode, with_plane, partial[w]); });
        }
      });
    }
  }
  for (auto& p : partial) {
    total.stats.candidates += p.stats.candidates;
    total.stats.disconnected += p.stats.disconnected;
    total.stats.positive_genus += p.stats.positive_genus;
    total.stats.spherical += p.stats.spherical;
    total.sphere_codes.merge(p.sphere_codes);
    total.plane_codes.merge(p.plane_codes);
  }
  return total;
}

Catalog sphere_catalog(int edges, EquivalenceMode mode, const SweepResult& result) {
  Catalog catalog{.edge_count = edges, .surface = Surface::Sphere, .mode = mode, .entries = {}, .stats = result.stats};
  for (const auto& raw : result.sphere_codes) {
    CanonicalCode code{edges, Rooting::Sphere, mode, raw};
    auto rep = decode_map(code);
    CatalogEntry entry{.code = std::move(code), .summary = summary(rep), .representative = rep};
    entry.face_orbit_count = static_cast<int>(automorphism_face_orbits(rep, mode).size());
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

// Maps the rotation of `a` (read with `o`) onto `b`, sending `root` to 0.
bool extend_to_isomorphism(const CombinatorialMap& a, const CombinatorialMap& b, Dart root, Orientation o) {
  const auto n = static_cast<std::size_t>(a.dart_count());
  std::vector<Dart> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Dart> stack{root};
  image[static_cast<std::size_t>(root)] = 0;
  used[0] = true;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    const Dart da = o == Orientation::Direct ? a.sigma(d) : a.sigma_inverse(d);
    const Dart db = b.sigma(image[static_cast<std::size_t>(d)]);
    const Dart ea = CombinatorialMap::alpha(d);
    const Dart eb = CombinatorialMap::alpha(image[static_cast<std::size_t>(d)]);
    for (auto [x, y] : {std::pair{da, db}, std::pair{ea, eb}}) {
      auto& slot = image[static_cast<std::size_t>(x)];
      if (slot < 0) {
        if (used[static_cast<std::size_t>(y)]) return false;
        slot = y;
        used[static_cast<std::size_t>(y)] = true;
        stack.push_back(x);
      } else if (slot != y) {
        return false;
      }
    }
  }
  return std::all_of(image.begin(), image.end(), [](Dart d) { return d >= 0; });
}

}  // namespace

Catalog enumerate_spherical(int edges, EquivalenceMode mode, int jobs) {
  return sphere_catalog(edges, mode, sweep(edges, mode, jobs, false));
}

PlaneDerivation derive_plane(int edges, EquivalenceMode mode, int jobs) {
  const auto result = sweep(edges, mode, jobs, true);
  PlaneDerivation out;
  out.sphere = sphere_catalog(edges, mode, result);
  out.by_face_orbits = plane_catalog_from_sphere(out.sphere);
  for (const auto& raw : result.plane_codes) out.direct_codes.push_back({edges, Rooting::Plane, mode, raw});
  return out;
}

bool constructions_agree(const PlaneDerivation& d) {
  const auto& entries = d.by_face_orbits.entries;
  return entries.size() == d.direct_codes.size() &&
         std::equal(entries.begin(), entries.end(), d.direct_codes.begin(),
                    [](const CatalogEntry& e, const CanonicalCode& c) { return e.code == c; });
}

Catalog enumerate_plane(int edges, EquivalenceMode mode, int jobs) {
  auto derivation = derive_plane(edges, mode, jobs);
  auto& catalog = derivation.by_face_orbits;
  if (!constructions_agree(derivation)) {
    throw std::logic_error("plane catalog by face orbits (" + std::to_string(catalog.entries.size()) +
                           " classes) disagrees with direct dedup of all rootings (" +
                           std::to_string(derivation.direct_codes.size()) + " classes)");
  }
  return std::move(catalog);
}

Catalog plane_catalog_from_sphere(const Catalog& sphere) {
  Catalog catalog{.edge_count = sphere.edge_count, .surface = Surface::Plane, .mode = sphere.mode, .entries = {},
                  .stats = sphere.stats};
  for (const auto& parent : sphere.entries) {
    const auto orbits = automorphism_face_orbits(parent.representative, sphere.mode);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto rooted = PlaneGraph::with_outer_face_index(parent.representative, orbits[i].front());
      auto code = canonical_code_plane(rooted, sphere.mode);
      auto plane = decode_plane(code);
      CatalogEntry entry{.code = std::move(code), .summary = summary(plane.map()), .representative = plane.map()};
      entry.outer_face = plane.outer_face_index();
      entry.parent_sphere_code = parent.code;
      entry.face_orbit_index = static_cast<int>(i);
      entry.flow = flow_summary(plane);
      catalog.entries.push_back(std::move(entry));
    }
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  const auto dup = std::adjacent_find(catalog.entries.begin(), catalog.entries.end(),
                                      [](const CatalogEntry& a, const CatalogEntry& b) { return a.code == b.code; });
  if (dup != catalog.entries.end()) {
    throw std::logic_error("two face orbits produced the same plane graph " + dup->code.to_string());
  }
  return catalog;
}

std::map<int, int> decomposition_table(const Catalog& sphere) {
  std::map<int, int> table;
  for (const auto& e : sphere.entries) ++table[e.face_orbit_count];
  return table;
}

std::map<int, int> decomposition_table(int edges, EquivalenceMode mode, int jobs) {
  return decomposition_table(enumerate_spherical(edges, mode, jobs));
}

bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, EquivalenceMode mode) {
  if (a.dart_count() != b.dart_count()) return false;
  for (Dart r = 0; r < a.dart_count(); ++r) {
    if (extend_to_isomorphism(a, b, r, Orientation::Direct)) return true;
    if (mode == EquivalenceMode::Full && extend_to_isomorphism(a, b, r, Orientation::Reversed)) return true;
  }
  return false;
}

Catalog naive_oracle_spherical(int edges, EquivalenceMode mode) {
  if (edges < 1) throw std::invalid_argument("edge count must be at least 1");
  if (edges > 4) throw ResourceLimitError("the naive oracle is limited to 4 edges");
  const int darts = 2 * edges;
  std::vector<Dart> rotation(static_cast<std::size_t>(darts));
  std::iota(rotation.begin(), rotation.end(), 0);
  Catalog catalog{.edge_count = edges, .surface = Surface::Sphere, .mode = mode, .entries = {}, .stats = {}};
  std::vector<CombinatorialMap> classes;
  do {
    ++catalog.stats.candidates;
    CombinatorialMap map(rotation);
    if (!is_connected(map)) {
      ++catalog.stats.disconnected;
      continue;
    }
    if (genus(map) != 0) {
      ++catalog.stats.positive_genus;
      continue;
    }
    ++catalog.stats.spherical;
    const bool known = std::any_of(classes.begin(), classes.end(),
                                   [&](const CombinatorialMap& c) { return is_isomorphic(map, c, mode); });
    if (!known) classes.push_back(std::move(map));
  } while (std::next_permutation(rotation.begin(), rotation.end()));

  for (auto& rep : classes) {
    CatalogEntry entry{.code = canonical_code_sphere(rep, mode), .summary = summary(rep), .representative = rep};
    entry.face_orbit_count = static_cast<int>(automorphism_face_orbits(rep, mode).size());
    catalog.entries.push_back(std::move(entry));
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  return catalog;
}

}  // namespace mapcensus
