#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mapcensus/combinatorial_map.hpp"
#include "support.hpp"

using namespace mapcensus;

namespace {

const auto kSegment = CombinatorialMap({0, 1});
const auto kLoop = CombinatorialMap::from_cycles(1, {{0, 1}});
const auto kNestedLoops = CombinatorialMap::from_cycles(2, {{0, 1, 2, 3}});
const auto kInterleavedLoops = CombinatorialMap::from_cycles(2, {{0, 2, 1, 3}});

}  // namespace

TEST_CASE("construction validates the rotation") {
  CHECK_THROWS_AS(CombinatorialMap({}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap({0}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap::from_cycles(1, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap::from_cycles(1, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap::from_cycles(0, {}), std::invalid_argument);
}

TEST_CASE("alpha is a fixed-point-free involution") {
  for (Dart d = 0; d < 16; ++d) {
    CHECK(CombinatorialMap::alpha(CombinatorialMap::alpha(d)) == d);
    CHECK(CombinatorialMap::alpha(d) != d);
  }
}

TEST_CASE("vertices are the cycles of sigma") {
  CHECK(vertices(kSegment) == std::vector<Cycle>{{0}, {1}});
  CHECK(vertices(kLoop) == std::vector<Cycle>{{0, 1}});
  CHECK(vertices(kNestedLoops) == std::vector<Cycle>{{0, 1, 2, 3}});
}

TEST_CASE("faces are the cycles of sigma after alpha") {
  CHECK(faces(kLoop) == std::vector<Cycle>{{0}, {1}});
  CHECK(faces(kSegment) == std::vector<Cycle>{{0, 1}});
  CHECK(faces(kInterleavedLoops).size() == 1);
  CHECK(faces(kInterleavedLoops).front().size() == 4);
  CHECK(faces(kNestedLoops) == std::vector<Cycle>{{0, 2}, {1}, {3}});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(kLoop));
  CHECK(is_connected(kSegment));
  CHECK_FALSE(is_connected(CombinatorialMap({0, 1, 2, 3})));
  CHECK_THROWS_AS(genus(CombinatorialMap({0, 1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(summary(CombinatorialMap({0, 1, 2, 3})), std::invalid_argument);
}

TEST_CASE("genus") {
  CHECK(genus(kLoop) == 0);
  CHECK(genus(kSegment) == 0);
  CHECK(genus(kInterleavedLoops) == 1);
  CHECK(genus(kNestedLoops) == 0);
}

TEST_CASE("summary of the one-edge maps") {
  const auto seg = summary(kSegment);
  CHECK(seg.vertices == 2);
  CHECK(seg.edges == 1);
  CHECK(seg.faces == 1);
  CHECK(seg.genus == 0);
  CHECK(seg.vertex_degrees == std::vector<int>{1, 1});
  CHECK(seg.face_degrees == std::vector<int>{2});

  const auto loop = summary(kLoop);
  CHECK(loop.vertices == 1);
  CHECK(loop.faces == 2);
  CHECK(loop.vertex_degrees == std::vector<int>{2});
  CHECK(loop.face_degrees == std::vector<int>{1, 1});
}

TEST_CASE("relabeling must respect the edge pairing") {
  CHECK_THROWS_AS((void)kNestedLoops.relabeled(std::vector<Dart>{1, 2, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)kNestedLoops.relabeled(std::vector<Dart>{0, 1}), std::invalid_argument);
  const auto swapped = kNestedLoops.relabeled(std::vector<Dart>{2, 3, 0, 1});
  CHECK(swapped == CombinatorialMap::from_cycles(2, {{2, 3, 0, 1}}));
}

TEST_CASE("reflection inverts the rotation") {
  const auto m = CombinatorialMap::from_cycles(3, {{0, 2, 4}, {1, 3}, {5}});
  CHECK(m.reflected() == CombinatorialMap::from_cycles(3, {{0, 4, 2}, {1, 3}, {5}}));
  CHECK(m.reflected().reflected() == m);
}

TEST_CASE("random maps: partitions, Euler formula and face conventions") {
  std::mt19937_64 rng(20231019);
  for (int edges = 1; edges <= 4; ++edges) {
    CAPTURE(edges);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto m = testing::random_connected_map(edges, rng);
      const auto n = static_cast<std::size_t>(m.dart_count());
      for (const auto& partition : {vertices(m), mapcensus::edges(m), faces(m)}) {
        std::vector<int> hits(n, 0);
        for (const auto& c : partition) {
          for (Dart d : c) ++hits[static_cast<std::size_t>(d)];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      }
      const auto s = summary(m);
      CHECK(s.genus >= 0);
      CHECK(s.vertices - s.edges + s.faces == 2 - 2 * s.genus);
      CHECK(std::accumulate(s.vertex_degrees.begin(), s.vertex_degrees.end(), 0) == 2 * edges);
      CHECK(std::accumulate(s.face_degrees.begin(), s.face_degrees.end(), 0) == 2 * edges);
      CHECK(s.face_degrees == testing::face_degrees_by_walk(m));
      CHECK(s.face_degrees == testing::face_degrees_alpha_after_sigma(m));
    }
  }
}
