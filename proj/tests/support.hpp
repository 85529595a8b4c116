// Test-only generators and oracles. Nothing here calls into the canonical
// labeling code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mapcensus/combinatorial_map.hpp"

namespace mapcensus::testing {

inline std::vector<Dart> random_rotation(int edges, std::mt19937_64& rng) {
  std::vector<Dart> r(static_cast<std::size_t>(2 * edges));
  std::iota(r.begin(), r.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

/// Uniform over rotations, then rejected until connected.
inline CombinatorialMap random_connected_map(int edges, std::mt19937_64& rng) {
  while (true) {
    CombinatorialMap m(random_rotation(edges, rng));
    if (is_connected(m)) return m;
  }
}

/// Rejection-sampled connected genus-0 map.
inline CombinatorialMap random_spherical_map(int edges, std::mt19937_64& rng) {
  while (true) {
    CombinatorialMap m = random_connected_map(edges, rng);
    if (genus(m) == 0) return m;
  }
}

/// A random relabeling that commutes with the edge pairing: shuffle the
/// edges, then flip each edge's two darts with probability 1/2.
inline std::vector<Dart> random_edge_relabeling(int edges, std::mt19937_64& rng) {
  std::vector<Dart> order(static_cast<std::size_t>(edges));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution flip(0.5);
  std::vector<Dart> relabel(static_cast<std::size_t>(2 * edges));
  for (int e = 0; e < edges; ++e) {
    const bool f = flip(rng);
    relabel[static_cast<std::size_t>(2 * e)] = 2 * order[static_cast<std::size_t>(e)] + (f ? 1 : 0);
    relabel[static_cast<std::size_t>(2 * e + 1)] = 2 * order[static_cast<std::size_t>(e)] + (f ? 0 : 1);
  }
  return relabel;
}

/// Faces by walking the boundary: from a dart cross its edge, then turn to
/// the next dart around the vertex reached. Returns sorted face sizes.
inline std::vector<int> face_degrees_by_walk(const CombinatorialMap& m) {
  std::vector<bool> marked(static_cast<std::size_t>(m.dart_count()), false);
  std::vector<int> sizes;
  for (Dart start = 0; start < m.dart_count(); ++start) {
    if (marked[static_cast<std::size_t>(start)]) continue;
    int size = 0;
    Dart d = start;
    do {
      marked[static_cast<std::size_t>(d)] = true;
      ++size;
      d = m.sigma(d ^ 1);
    } while (d != start);
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Face sizes under the opposite composition convention alpha o sigma.
inline std::vector<int> face_degrees_alpha_after_sigma(const CombinatorialMap& m) {
  std::vector<Dart> perm(static_cast<std::size_t>(m.dart_count()));
  for (Dart d = 0; d < m.dart_count(); ++d) perm[static_cast<std::size_t>(d)] = m.sigma(d) ^ 1;
  std::vector<int> sizes;
  for (const auto& c : permutation_cycles(perm)) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Tries to extend `root` -> `target` to a bijection carrying the rotation
/// of `a` (reversed if `mirror`) onto that of `b` and commuting with alpha.
inline bool extends_to_isomorphism(const CombinatorialMap& a, const CombinatorialMap& b, Dart root, Dart target,
                                   bool mirror) {
  const auto n = static_cast<std::size_t>(a.dart_count());
  if (static_cast<std::size_t>(b.dart_count()) != n) return false;
  std::vector<Dart> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Dart> todo{root};
  image[static_cast<std::size_t>(root)] = target;
  used[static_cast<std::size_t>(target)] = true;
  while (!todo.empty()) {
    const Dart d = todo.back();
    todo.pop_back();
    const Dart img = image[static_cast<std::size_t>(d)];
    const Dart pairs[2][2] = {{mirror ? a.sigma_inverse(d) : a.sigma(d), b.sigma(img)}, {d ^ 1, img ^ 1}};
    for (const auto& [x, y] : pairs) {
      auto& slot = image[static_cast<std::size_t>(x)];
      if (slot == y) continue;
      if (slot >= 0 || used[static_cast<std::size_t>(y)]) return false;
      slot = y;
      used[static_cast<std::size_t>(y)] = true;
      todo.push_back(x);
    }
  }
  return std::find(image.begin(), image.end(), -1) == image.end();
}

/// Plane graphs (map, dart on outer face) are isomorphic iff some
/// isomorphism sends a dart of one outer face to the given dart of the
/// other. Mirror isomorphisms carry phi-cycles to alpha-images of
/// phi-cycles, so their roots come from alpha(outer face).
inline bool plane_isomorphic(const CombinatorialMap& a, Dart outer_a, const CombinatorialMap& b, Dart outer_b,
                             bool allow_mirror) {
  Dart d = outer_a;
  do {
    if (extends_to_isomorphism(a, b, d, outer_b, false)) return true;
    if (allow_mirror && extends_to_isomorphism(a, b, d ^ 1, outer_b, true)) return true;
    d = a.sigma(d ^ 1);
  } while (d != outer_a);
  return false;
}

/// Rooted planar maps with n edges: 2 * 3^n * (2n)! / (n! (n+2)!).
inline std::uint64_t rooted_planar_maps(int n) {
  // Evaluated as 2 * 3^n * C(2n, n) / ((n+1)(n+2)).
  std::uint64_t binom = 1;
  for (int k = 1; k <= n; ++k) binom = binom * static_cast<std::uint64_t>(n + k) / static_cast<std::uint64_t>(k);
  std::uint64_t pow3 = 1;
  for (int k = 0; k < n; ++k) pow3 *= 3;
  return 2 * pow3 * binom / static_cast<std::uint64_t>((n + 1) * (n + 2));
}

/// Labeled spherical rotations with the pairing fixed. Each rooted map has
/// 2^n n! / (2n) labelings that fix the pairing and keep the root class.
inline std::uint64_t labeled_spherical_rotations(int n) {
  std::uint64_t labelings = 1;
  for (int k = 1; k < n; ++k) labelings *= static_cast<std::uint64_t>(2 * k);
  return rooted_planar_maps(n) * labelings;
}

}  // namespace mapcensus::testing
