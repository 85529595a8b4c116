#include "mapcensus/canon.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mapcensus {
namespace {

struct Candidate {
  Dart root;
  Orientation orientation;
};

Dart successor(const CombinatorialMap& map, Dart d, Orientation o) {
  return o == Orientation::Direct ? map.sigma(d) : map.sigma_inverse(d);
}

// First-visit labeling from one root. Fills label (old -> new) and order
// (new -> old). Returns false if some dart is unreachable.
bool label_darts(const CombinatorialMap& map, Dart root, Orientation o, std::vector<Dart>& label,
                 std::vector<Dart>& order) {
  const auto n = static_cast<std::size_t>(map.dart_count());
  label.assign(n, -1);
  order.clear();
  order.reserve(n);
  label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  for (std::size_t next = 0; next < order.size(); ++next) {
    const Dart d = order[next];
    for (Dart x : {successor(map, d, o), CombinatorialMap::alpha(d)}) {
      if (label[static_cast<std::size_t>(x)] < 0) {
        label[static_cast<std::size_t>(x)] = static_cast<Dart>(order.size());
        order.push_back(x);
      }
    }
  }
  return order.size() == n;
}

// Lexicographically least traversal code over the candidates, abandoning a
// candidate as soon as its prefix exceeds the best so far.
std::vector<int> minimal_code(const CombinatorialMap& map, const std::vector<Candidate>& candidates) {
  const auto n = static_cast<std::size_t>(map.dart_count());
  std::vector<int> best;
  std::vector<int> current(2 * n);
  std::vector<Dart> label(n);
  std::vector<Dart> order;
  order.reserve(n);

  for (const auto& [root, o] : candidates) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(root)] = 0;
    order.push_back(root);
    bool smaller = best.empty();
    bool abandoned = false;
    for (std::size_t next = 0; next < order.size(); ++next) {
      const Dart d = order[next];
      for (Dart x : {successor(map, d, o), CombinatorialMap::alpha(d)}) {
        if (label[static_cast<std::size_t>(x)] < 0) {
          label[static_cast<std::size_t>(x)] = static_cast<Dart>(order.size());
          order.push_back(x);
        }
      }
      const std::size_t at = 2 * next;
      current[at] = label[static_cast<std::size_t>(successor(map, d, o))];
      current[at + 1] = label[static_cast<std::size_t>(CombinatorialMap::alpha(d))];
      if (!smaller) {
        for (std::size_t k = at; k < at + 2; ++k) {
          if (current[k] != best[k]) {
            smaller = current[k] < best[k];
            abandoned = !smaller;
            break;
          }
        }
        if (abandoned) break;
      }
    }
    if (abandoned) continue;
    if (order.size() != n) throw std::invalid_argument("traversal did not reach every dart; map is disconnected");
    if (smaller) best = current;
  }
  return best;
}

std::vector<Candidate> sphere_candidates(const CombinatorialMap& map, EquivalenceMode mode) {
  std::vector<Candidate> out;
  for (Dart d = 0; d < map.dart_count(); ++d) out.push_back({d, Orientation::Direct});
  if (mode == EquivalenceMode::Full) {
    for (Dart d = 0; d < map.dart_count(); ++d) out.push_back({d, Orientation::Reversed});
  }
  return out;
}

std::vector<Candidate> face_candidates(const Cycle& face, EquivalenceMode mode) {
  std::vector<Candidate> out;
  for (Dart d : face) out.push_back({d, Orientation::Direct});
  if (mode == EquivalenceMode::Full) {
    for (Dart d : face) out.push_back({CombinatorialMap::alpha(d), Orientation::Reversed});
  }
  return out;
}

void require_spherical(const CombinatorialMap& map) {
  if (!is_connected(map)) throw std::invalid_argument("map is disconnected");
  if (genus(map) != 0) throw std::invalid_argument("map is not spherical (genus > 0)");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(EquivalenceMode mode) {
  return mode == EquivalenceMode::Full ? "full" : "oriented";
}

std::string_view to_string(Rooting rooting) { return rooting == Rooting::Sphere ? "sphere" : "plane"; }

std::string CanonicalCode::to_string() const {
  std::string out = "E" + std::to_string(edge_count) + ':' + (rooting == Rooting::Sphere ? 'S' : 'P') + ':' +
                    (mode == EquivalenceMode::Oriented ? 'O' : 'F') + ':';
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i != 0) out += '.';
    out += std::to_string(code[i]);
  }
  return out;
}

CanonicalCode CanonicalCode::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed canonical code '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != 'E') fail("missing 'E<edges>' prefix");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail("missing ':'");
  CanonicalCode out;
  try {
    out.edge_count = parse_int(text.substr(1, colon - 1));
  } catch (const std::invalid_argument&) {
    fail("bad edge count");
  }
  if (out.edge_count < 1) fail("edge count must be positive");
  auto rest = text.substr(colon + 1);
  if (rest.size() < 4 || rest[1] != ':' || rest[3] != ':') fail("expected '<S|P>:<O|F>:'");
  if (rest[0] == 'S') out.rooting = Rooting::Sphere;
  else if (rest[0] == 'P') out.rooting = Rooting::Plane;
  else fail("rooting must be S or P");
  if (rest[2] == 'O') out.mode = EquivalenceMode::Oriented;
  else if (rest[2] == 'F') out.mode = EquivalenceMode::Full;
  else fail("mode must be O or F");
  rest = rest.substr(4);
  while (true) {
    const auto dot = rest.find('.');
    try {
      out.code.push_back(parse_int(rest.substr(0, dot)));
    } catch (const std::invalid_argument&) {
      fail("bad code entry");
    }
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  if (out.code.size() != static_cast<std::size_t>(4 * out.edge_count)) {
    fail("expected " + std::to_string(4 * out.edge_count) + " entries, got " + std::to_string(out.code.size()));
  }
  return out;
}

PlaneGraph::PlaneGraph(CombinatorialMap map, Dart outer_dart) : map_(std::move(map)) {
  require_spherical(map_);
  if (outer_dart < 0 || outer_dart >= map_.dart_count()) {
    throw std::invalid_argument("outer dart out of range");
  }
  for (const auto& face : faces(map_)) {
    if (std::find(face.begin(), face.end(), outer_dart) != face.end()) {
      outer_face_ = face;
      break;
    }
  }
}

PlaneGraph PlaneGraph::with_outer_face_index(CombinatorialMap map, int face_index) {
  const auto fs = faces(map);
  if (face_index < 0 || static_cast<std::size_t>(face_index) >= fs.size()) {
    throw std::invalid_argument("face index out of range");
  }
  const Dart d = fs[static_cast<std::size_t>(face_index)].front();
  return PlaneGraph(std::move(map), d);
}

int PlaneGraph::outer_face_index() const {
  return face_index_of_darts(map_)[static_cast<std::size_t>(outer_face_.front())];
}

std::vector<Dart> traversal_labels(const CombinatorialMap& map, Dart root, Orientation orientation) {
  if (root < 0 || root >= map.dart_count()) throw std::invalid_argument("root dart out of range");
  std::vector<Dart> label;
  std::vector<Dart> order;
  if (!label_darts(map, root, orientation, label, order)) {
    throw std::invalid_argument("traversal did not reach every dart; map is disconnected");
  }
  return label;
}

std::vector<int> traversal_code(const CombinatorialMap& map, Dart root, Orientation orientation) {
  const auto label = traversal_labels(map, root, orientation);
  std::vector<Dart> order(label.size());
  for (std::size_t d = 0; d < label.size(); ++d) order[static_cast<std::size_t>(label[d])] = static_cast<Dart>(d);
  std::vector<int> code;
  code.reserve(2 * label.size());
  for (Dart old : order) {
    code.push_back(label[static_cast<std::size_t>(successor(map, old, orientation))]);
    code.push_back(label[static_cast<std::size_t>(CombinatorialMap::alpha(old))]);
  }
  return code;
}

CanonicalCode canonical_code_sphere(const CombinatorialMap& map, EquivalenceMode mode) {
  require_spherical(map);
  return {map.edge_count(), Rooting::Sphere, mode, minimal_code(map, sphere_candidates(map, mode))};
}

CanonicalCode canonical_code_plane(const PlaneGraph& plane, EquivalenceMode mode) {
  return {plane.map().edge_count(), Rooting::Plane, mode, minimal_code(plane.map(), face_candidates(plane.outer_face(), mode))};
}

MapCodes all_codes(const CombinatorialMap& map, EquivalenceMode mode) {
  if (!is_connected(map)) throw std::invalid_argument("map is disconnected");
  const auto fs = faces(map);
  if (static_cast<int>(vertices(map).size()) - map.edge_count() + static_cast<int>(fs.size()) != 2) {
    throw std::invalid_argument("map is not spherical (genus > 0)");
  }
  MapCodes out{{map.edge_count(), Rooting::Sphere, mode, minimal_code(map, sphere_candidates(map, mode))}, {}};
  out.plane_by_face.reserve(fs.size());
  for (const auto& face : fs) {
    out.plane_by_face.push_back(
        {map.edge_count(), Rooting::Plane, mode, minimal_code(map, face_candidates(face, mode))});
  }
  return out;
}

PlaneGraph reflect(const PlaneGraph& plane) {
  return PlaneGraph(plane.map().reflected(), CombinatorialMap::alpha(plane.outer_face().front()));
}

std::vector<Automorphism> automorphisms(const CombinatorialMap& map, EquivalenceMode mode) {
  require_spherical(map);
  const auto candidates = sphere_candidates(map, mode);
  const auto best = minimal_code(map, candidates);

  std::vector<std::pair<Candidate, std::vector<Dart>>> matches;
  for (const auto& c : candidates) {
    if (traversal_code(map, c.root, c.orientation) == best) {
      matches.emplace_back(c, traversal_labels(map, c.root, c.orientation));
    }
  }
  // matches is non-empty: the minimizing candidate itself is in it.
  const auto& [base, base_label] = matches.front();
  std::vector<Dart> base_order(base_label.size());
  for (std::size_t d = 0; d < base_label.size(); ++d) {
    base_order[static_cast<std::size_t>(base_label[d])] = static_cast<Dart>(d);
  }

  std::vector<Automorphism> out;
  for (const auto& [c, label] : matches) {
    Automorphism a;
    a.orientation = c.orientation == base.orientation ? Orientation::Direct : Orientation::Reversed;
    a.image.resize(label.size());
    for (std::size_t d = 0; d < label.size(); ++d) {
      a.image[d] = base_order[static_cast<std::size_t>(label[d])];
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const Automorphism& x, const Automorphism& y) {
    return std::pair(-static_cast<int>(x.orientation), x.image) < std::pair(-static_cast<int>(y.orientation), y.image);
  });
  return out;
}

std::vector<std::vector<int>> automorphism_face_orbits(const CombinatorialMap& map, EquivalenceMode mode) {
  const auto fs = faces(map);
  const auto face_of = face_index_of_darts(map);
  DisjointSets sets(fs.size());
  for (const auto& a : automorphisms(map, mode)) {
    for (std::size_t f = 0; f < fs.size(); ++f) {
      Dart image = a.image[static_cast<std::size_t>(fs[f].front())];
      // A reversing symmetry carries phi-cycles onto alpha-images of phi-cycles.
      if (a.orientation == Orientation::Reversed) image = CombinatorialMap::alpha(image);
      sets.unite(f, static_cast<std::size_t>(face_of[static_cast<std::size_t>(image)]));
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of_root(fs.size(), -1);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto root = sets.find(f);
    if (orbit_of_root[root] < 0) {
      orbit_of_root[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(orbit_of_root[root])].push_back(static_cast<int>(f));
  }
  return orbits;
}

CombinatorialMap decode_map(const CanonicalCode& code) {
  const auto n = static_cast<std::size_t>(2 * code.edge_count);
  if (code.edge_count < 1 || code.code.size() != 2 * n) {
    throw std::invalid_argument("code length does not match its edge count");
  }
  std::vector<Dart> succ(n);
  std::vector<Dart> partner(n);
  std::vector<bool> hit(n, false);
  for (std::size_t d = 0; d < n; ++d) {
    const int s = code.code[2 * d];
    const int a = code.code[2 * d + 1];
    if (s < 0 || a < 0 || static_cast<std::size_t>(s) >= n || static_cast<std::size_t>(a) >= n) {
      throw std::invalid_argument("code entry out of range");
    }
    if (hit[static_cast<std::size_t>(s)]) throw std::invalid_argument("code rotation is not a bijection");
    hit[static_cast<std::size_t>(s)] = true;
    succ[d] = s;
    partner[d] = a;
  }
  for (std::size_t d = 0; d < n; ++d) {
    const auto a = static_cast<std::size_t>(partner[d]);
    if (a == d || static_cast<std::size_t>(partner[a]) != d) {
      throw std::invalid_argument("code edge pairing is not a fixed-point-free involution");
    }
  }
  std::vector<Dart> renumber(n, -1);
  Dart next = 0;
  for (std::size_t d = 0; d < n; ++d) {
    if (renumber[d] >= 0) continue;
    renumber[d] = next;
    renumber[static_cast<std::size_t>(partner[d])] = next + 1;
    next += 2;
  }
  std::vector<Dart> rotation(n);
  for (std::size_t d = 0; d < n; ++d) {
    rotation[static_cast<std::size_t>(renumber[d])] = renumber[static_cast<std::size_t>(succ[d])];
  }
  return CombinatorialMap(std::move(rotation));
}

PlaneGraph decode_plane(const CanonicalCode& code) {
  if (code.rooting != Rooting::Plane) throw std::invalid_argument("not a plane code");
  return PlaneGraph(decode_map(code), 0);
}

bool is_canonical(const CanonicalCode& code) {
  try {
    auto map = decode_map(code);
    if (code.rooting == Rooting::Sphere) return canonical_code_sphere(map, code.mode) == code;
    return canonical_code_plane(PlaneGraph(std::move(map), 0), code.mode) == code;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace mapcensus
