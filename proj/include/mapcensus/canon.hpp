#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mapcensus/combinatorial_map.hpp"

namespace mapcensus {

/// Which homeomorphisms of the sphere count as isomorphisms.
enum class EquivalenceMode {
  Oriented,  // orientation-preserving only
  Full,      // mirror images identified too
};

enum class Rooting { Sphere, Plane };

enum class Orientation : int { Direct = 1, Reversed = -1 };

std::string_view to_string(EquivalenceMode mode);
std::string_view to_string(Rooting rooting);

/// Isomorphism-class key. Two maps (or plane graphs) of the same rooting and
/// mode have equal codes iff they are isomorphic.
///
/// Serialized as "E<edges>:<S|P>:<O|F>:" followed by the 4E integers joined
/// by '.'.
struct CanonicalCode {
  int edge_count = 0;
  Rooting rooting = Rooting::Sphere;
  EquivalenceMode mode = EquivalenceMode::Full;
  std::vector<int> code;

  [[nodiscard]] std::string to_string() const;

  /// Throws std::invalid_argument on malformed text. Only the syntax is
  /// checked; see is_canonical() for semantic validation.
  static CanonicalCode parse(std::string_view text);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

/// A genus-0 connected map with one face chosen as the unbounded one.
class PlaneGraph {
 public:
  /// `outer_dart` may be any dart of the outer face. Throws
  /// std::invalid_argument if the map is disconnected or not spherical.
  PlaneGraph(CombinatorialMap map, Dart outer_dart);

  static PlaneGraph with_outer_face_index(CombinatorialMap map, int face_index);

  [[nodiscard]] const CombinatorialMap& map() const noexcept { return map_; }
  /// The outer face as a phi-cycle starting from its least dart.
  [[nodiscard]] const Cycle& outer_face() const noexcept { return outer_face_; }
  /// Position of the outer face in faces(map()).
  [[nodiscard]] int outer_face_index() const;

 private:
  CombinatorialMap map_;
  Cycle outer_face_;
};

/// Relabels darts in first-visit order from `root`, taking the sigma (or
/// sigma^-1 when reversed) successor before the alpha partner, and emits
/// (label(sigma'(d)), label(alpha(d))) for each new label in order.
/// Result has 4E entries. Throws std::invalid_argument if the traversal
/// does not reach every dart.
std::vector<int> traversal_code(const CombinatorialMap& map, Dart root, Orientation orientation);

/// The first-visit labeling used by traversal_code: result[old] = new.
std::vector<Dart> traversal_labels(const CombinatorialMap& map, Dart root, Orientation orientation);

/// Least traversal code over all roots (and both orientations in Full mode).
/// Throws std::invalid_argument unless the map is connected with genus 0.
CanonicalCode canonical_code_sphere(const CombinatorialMap& map, EquivalenceMode mode);

/// Least traversal code over roots on the outer face; Full mode also
/// minimizes over the mirror image rooted on its outer face.
CanonicalCode canonical_code_plane(const PlaneGraph& plane, EquivalenceMode mode);

/// Sphere code together with the plane code of every face rooting, in
/// faces(map) order. Validates the map once.
struct MapCodes {
  CanonicalCode sphere;
  std::vector<CanonicalCode> plane_by_face;
};
MapCodes all_codes(const CombinatorialMap& map, EquivalenceMode mode);

/// Mirror image (sigma^-1, alpha) with outer face alpha(old outer face).
PlaneGraph reflect(const PlaneGraph& plane);

/// A symmetry of a map. Orientation-reversing ones conjugate sigma to
/// sigma^-1.
struct Automorphism {
  std::vector<Dart> image;
  Orientation orientation = Orientation::Direct;
};

/// Every automorphism allowed by `mode`, identity first. Each arises from a
/// (root, orientation) pair whose traversal code equals the canonical one.
std::vector<Automorphism> automorphisms(const CombinatorialMap& map, EquivalenceMode mode);

/// Orbits of faces (indices into faces(map)) under the automorphism group.
/// Each orbit is ascending; orbits are ordered by their least face.
std::vector<std::vector<int>> automorphism_face_orbits(const CombinatorialMap& map,
                                                       EquivalenceMode mode);

/// Rebuilds the labeled map a code describes, renumbered so that edges are
/// (2i, 2i+1) in order of first appearance; the code's root becomes dart 0.
/// Throws std::invalid_argument if the integers do not describe a map.
CombinatorialMap decode_map(const CanonicalCode& code);

/// decode_map with the outer face taken through dart 0. Requires a plane
/// code.
PlaneGraph decode_plane(const CanonicalCode& code);

/// True iff `code` is well formed and is the canonical code of the map it
/// decodes to.
bool is_canonical(const CanonicalCode& code);

}  // namespace mapcensus
