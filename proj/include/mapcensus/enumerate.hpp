#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mapcensus/canon.hpp"
#include "mapcensus/morse.hpp"

namespace mapcensus {

/// Largest edge count the exhaustive sweep accepts ((2E)! rotations).
inline constexpr int kMaxEdges = 6;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Surface = Rooting;

/// How the raw rotations of one sweep were classified.
struct SweepStatistics {
  std::uint64_t candidates = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t positive_genus = 0;
  std::uint64_t spherical = 0;

  friend bool operator==(const SweepStatistics&, const SweepStatistics&) = default;
};

struct CatalogEntry {
  CanonicalCode code;
  MapSummary summary;
  /// The labeling decoded from `code`; for plane entries dart 0 lies on the
  /// outer face.
  CombinatorialMap representative;

  /// Sphere entries: number of automorphism orbits of faces.
  int face_orbit_count = 0;

  // Plane entries only.
  std::optional<int> outer_face{};  // index into faces(representative)
  std::optional<CanonicalCode> parent_sphere_code{};
  std::optional<int> face_orbit_index{};
  std::optional<FlowSummary> flow{};
};

struct Catalog {
  int edge_count = 0;
  Surface surface = Surface::Sphere;
  EquivalenceMode mode = EquivalenceMode::Full;
  std::vector<CatalogEntry> entries;  // strictly increasing codes
  SweepStatistics stats;
};

/// Both constructions of a plane catalog, before they are compared.
struct PlaneDerivation {
  Catalog sphere;
  Catalog by_face_orbits;
  std::vector<CanonicalCode> direct_codes;  // sorted, from every (map, face) rooting
};

/// All connected spherical maps with `edges` edges up to isomorphism.
/// `jobs` <= 0 means one worker per hardware thread; the result does not
/// depend on it. Throws std::invalid_argument for edges < 1 and
/// ResourceLimitError above kMaxEdges.
Catalog enumerate_spherical(int edges, EquivalenceMode mode, int jobs = 0);

/// All plane graphs with `edges` edges. Throws std::logic_error if the
/// face-orbit construction and the direct dedup of all rootings disagree.
Catalog enumerate_plane(int edges, EquivalenceMode mode, int jobs = 0);

PlaneDerivation derive_plane(int edges, EquivalenceMode mode, int jobs = 0);

/// True iff both constructions in `d` produced the same class set.
bool constructions_agree(const PlaneDerivation& d);

/// One plane entry per face orbit of each sphere entry.
Catalog plane_catalog_from_sphere(const Catalog& sphere);

/// face-orbit count -> number of sphere entries with that many orbits.
std::map<int, int> decomposition_table(const Catalog& sphere);
std::map<int, int> decomposition_table(int edges, EquivalenceMode mode, int jobs = 0);

/// Brute-force isomorphism test: tries to extend every root/orientation
/// pairing of a dart of `a` with dart 0 of `b` to a structure-preserving
/// bijection.
bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, EquivalenceMode mode);

/// Sphere catalog built without canonical codes: every spherical rotation
/// is compared against the classes found so far with is_isomorphic. Entries
/// keep the first-found labeling; codes are attached afterwards only so the
/// result can be ordered and compared. Limited to edges <= 4.
Catalog naive_oracle_spherical(int edges, EquivalenceMode mode);

}  // namespace mapcensus
