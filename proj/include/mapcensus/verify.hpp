#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mapcensus/enumerate.hpp"

namespace mapcensus {

struct ExpectedCount {
  Surface surface = Surface::Sphere;
  int edges = 0;
  int count = 0;
};

/// Published class counts the census is checked against.
struct Expectations {
  std::vector<ExpectedCount> counts;
  /// edges -> (face-orbit count -> number of sphere classes)
  std::map<int, std::map<int, int>> decompositions;

  /// The built-in table: sphere 2, 4, -, 26 and plane 2, 6, 25, 55 for one
  /// to four edges, and the four-edge split {1: 4, 2: 15, 3: 7}.
  static Expectations published();

  /// Schema: {"counts": [{"surface": "sphere"|"plane", "edges": N,
  /// "count": N}, ...], "decompositions": {"4": {"1": 4, ...}}}.
  static Expectations from_json(const nlohmann::json& j);
};

struct CountRow {
  Surface surface = Surface::Sphere;
  int edges = 0;
  int actual = 0;
  std::optional<int> expected;

  [[nodiscard]] bool matches() const { return !expected || *expected == actual; }
};

struct ModeResult {
  EquivalenceMode mode = EquivalenceMode::Full;
  std::vector<CountRow> rows;
  std::map<int, std::map<int, int>> decompositions;  // every edge count
  std::map<int, SweepStatistics> sweep_stats;
  int checked = 0;
  int matched = 0;
  /// Largest k such that every expectation with at most k edges matches.
  int consistent_through = 0;
  bool constructions_agree = true;
  bool pass = false;
  double seconds = 0.0;
};

struct VerificationReport {
  int max_edges = 0;
  std::vector<ModeResult> modes;  // full, then oriented
  /// Mode that meets every expectation (full preferred when both do).
  std::optional<EquivalenceMode> paper_mode;
  /// Mode with the most matched expectations, used when none passes.
  EquivalenceMode closest_mode = EquivalenceMode::Full;
  /// Human-readable rows where the two modes give different counts.
  std::vector<std::string> mode_differences;
  bool pass = false;

  [[nodiscard]] const ModeResult& result(EquivalenceMode mode) const;
  [[nodiscard]] std::string to_text(const Expectations& expected) const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

VerificationReport verify(int max_edges, const Expectations& expected, int jobs = 0);

}  // namespace mapcensus
