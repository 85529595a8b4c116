#include "mapcensus/combinatorial_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mapcensus {
namespace {

std::vector<Dart> invert(std::span<const Dart> perm) {
  std::vector<Dart> inv(perm.size());
  for (std::size_t d = 0; d < perm.size(); ++d) inv[static_cast<std::size_t>(perm[d])] = static_cast<Dart>(d);
  return inv;
}

void check_permutation(std::span<const Dart> perm) {
  if (perm.empty() || perm.size() % 2 != 0) {
    throw std::invalid_argument("rotation must act on a positive even number of darts, got " +
                                std::to_string(perm.size()));
  }
  std::vector<bool> seen(perm.size(), false);
  for (Dart image : perm) {
    if (image < 0 || static_cast<std::size_t>(image) >= perm.size()) {
      throw std::invalid_argument("dart " + std::to_string(image) + " out of range");
    }
    if (seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("rotation is not a bijection: dart " + std::to_string(image) +
                                  " has two preimages");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

std::vector<int> sorted_lengths(const std::vector<Cycle>& cycles) {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<Dart> rotation) : sigma_(std::move(rotation)) {
  check_permutation(sigma_);
  sigma_inv_ = invert(sigma_);
}

CombinatorialMap CombinatorialMap::from_cycles(int edge_count, const std::vector<Cycle>& cycles) {
  if (edge_count < 1) throw std::invalid_argument("a map needs at least one edge");
  const auto n = static_cast<std::size_t>(2 * edge_count);
  std::vector<Dart> rotation(n);
  std::vector<bool> used(n, false);
  for (std::size_t d = 0; d < n; ++d) rotation[d] = static_cast<Dart>(d);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Dart d = cycle[i];
      if (d < 0 || static_cast<std::size_t>(d) >= n) {
        throw std::invalid_argument("dart " + std::to_string(d) + " out of range");
      }
      if (used[static_cast<std::size_t>(d)]) {
        throw std::invalid_argument("dart " + std::to_string(d) + " appears in two cycles");
      }
      used[static_cast<std::size_t>(d)] = true;
      rotation[static_cast<std::size_t>(d)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return CombinatorialMap(std::move(rotation));
}

CombinatorialMap CombinatorialMap::reflected() const { return CombinatorialMap(sigma_inv_); }

CombinatorialMap CombinatorialMap::relabeled(std::span<const Dart> relabel) const {
  if (relabel.size() != sigma_.size()) throw std::invalid_argument("relabeling has wrong size");
  check_permutation(relabel);
  for (std::size_t d = 0; d < relabel.size(); ++d) {
    if (relabel[d ^ 1] != alpha(relabel[d])) {
      throw std::invalid_argument("relabeling does not preserve the edge pairing");
    }
  }
  std::vector<Dart> rotation(sigma_.size());
  for (std::size_t d = 0; d < sigma_.size(); ++d) {
    rotation[static_cast<std::size_t>(relabel[d])] = relabel[static_cast<std::size_t>(sigma_[d])];
  }
  return CombinatorialMap(std::move(rotation));
}

std::vector<Cycle> permutation_cycles(std::span<const Dart> perm) {
  std::vector<Cycle> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    for (auto d = static_cast<Dart>(start); !seen[static_cast<std::size_t>(d)];
         d = perm[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = true;
      cycle.push_back(d);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Cycle> vertices(const CombinatorialMap& map) { return permutation_cycles(map.rotation()); }

std::vector<Cycle> edges(const CombinatorialMap& map) {
  std::vector<Cycle> out;
  for (Dart d = 0; d < map.dart_count(); d += 2) out.push_back({d, d + 1});
  return out;
}

std::vector<Cycle> faces(const CombinatorialMap& map) {
  std::vector<Dart> phi(static_cast<std::size_t>(map.dart_count()));
  for (Dart d = 0; d < map.dart_count(); ++d) phi[static_cast<std::size_t>(d)] = map.phi(d);
  return permutation_cycles(phi);
}

std::vector<int> face_index_of_darts(const CombinatorialMap& map) {
  std::vector<int> index(static_cast<std::size_t>(map.dart_count()), -1);
  const auto fs = faces(map);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (Dart d : fs[f]) index[static_cast<std::size_t>(d)] = static_cast<int>(f);
  }
  return index;
}

bool is_connected(const CombinatorialMap& map) {
  const auto n = static_cast<std::size_t>(map.dart_count());
  std::vector<bool> seen(n, false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart next : {map.sigma(d), CombinatorialMap::alpha(d)}) {
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == n;
}

int genus(const CombinatorialMap& map) {
  if (!is_connected(map)) throw std::invalid_argument("genus is only defined for connected maps");
  const auto v = static_cast<int>(vertices(map).size());
  const auto f = static_cast<int>(faces(map).size());
  return (2 - v + map.edge_count() - f) / 2;
}

MapSummary summary(const CombinatorialMap& map) {
  if (!is_connected(map)) throw std::invalid_argument("summary requires a connected map");
  const auto vs = vertices(map);
  const auto fs = faces(map);
  MapSummary s;
  s.vertices = static_cast<int>(vs.size());
  s.edges = map.edge_count();
  s.faces = static_cast<int>(fs.size());
  s.genus = (2 - s.vertices + s.edges - s.faces) / 2;
  s.vertex_degrees = sorted_lengths(vs);
  s.face_degrees = sorted_lengths(fs);
  return s;
}

}  // namespace mapcensus
