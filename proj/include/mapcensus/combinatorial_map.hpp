#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mapcensus {

/// Index of a half-edge. A map with E edges has darts 0 .. 2E-1.
using Dart = std::int32_t;

/// One cycle of a permutation, listed from its smallest dart.
using Cycle = std::vector<Dart>;

/// A connected or disconnected graph embedded in an oriented surface, given
/// as a rotation system over darts.
///
/// The edge involution is fixed: dart 2i is paired with 2i+1. The rotation
/// `sigma` sends each dart to its counterclockwise successor around its
/// vertex. Faces are the cycles of phi = sigma o alpha (apply alpha first).
///
/// Instances are immutable and validated on construction.
class CombinatorialMap {
 public:
  /// Throws std::invalid_argument unless `rotation` is a permutation of
  /// [0, 2E) for some E >= 1.
  explicit CombinatorialMap(std::vector<Dart> rotation);

  /// Builds the rotation from disjoint cycles; darts missing from every
  /// cycle are fixed points. Throws std::invalid_argument on repeated or
  /// out-of-range darts.
  static CombinatorialMap from_cycles(int edge_count, const std::vector<Cycle>& cycles);

  static constexpr Dart alpha(Dart d) noexcept { return d ^ 1; }

  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(sigma_.size() / 2); }
  [[nodiscard]] int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }

  [[nodiscard]] Dart sigma(Dart d) const { return sigma_[static_cast<std::size_t>(d)]; }
  [[nodiscard]] Dart sigma_inverse(Dart d) const { return sigma_inv_[static_cast<std::size_t>(d)]; }
  [[nodiscard]] Dart phi(Dart d) const { return sigma(alpha(d)); }

  [[nodiscard]] std::span<const Dart> rotation() const noexcept { return sigma_; }
  [[nodiscard]] std::span<const Dart> rotation_inverse() const noexcept { return sigma_inv_; }

  /// Mirror image: the same graph with every rotation reversed.
  [[nodiscard]] CombinatorialMap reflected() const;

  /// Renames dart d to relabel[d]. The relabeling must commute with alpha
  /// (relabel[d ^ 1] == relabel[d] ^ 1); throws std::invalid_argument
  /// otherwise.
  [[nodiscard]] CombinatorialMap relabeled(std::span<const Dart> relabel) const;

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.sigma_ == b.sigma_;
  }

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
};

struct MapSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  std::vector<int> vertex_degrees;  // ascending
  std::vector<int> face_degrees;    // ascending

  friend bool operator==(const MapSummary&, const MapSummary&) = default;
};

/// Cycles of an arbitrary permutation, each starting at its least element,
/// ordered by that element.
std::vector<Cycle> permutation_cycles(std::span<const Dart> perm);

std::vector<Cycle> vertices(const CombinatorialMap& map);
std::vector<Cycle> edges(const CombinatorialMap& map);
std::vector<Cycle> faces(const CombinatorialMap& map);

/// For each dart, the index (into faces(map)) of the face containing it.
std::vector<int> face_index_of_darts(const CombinatorialMap& map);

/// True iff <sigma, alpha> acts transitively on the darts.
bool is_connected(const CombinatorialMap& map);

/// (2 - V + E - F) / 2. Throws std::invalid_argument for disconnected maps.
int genus(const CombinatorialMap& map);

/// Throws std::invalid_argument for disconnected maps.
MapSummary summary(const CombinatorialMap& map);

}  // namespace mapcensus
