#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mapcensus/enumerate.hpp"

namespace mapcensus {

/// Cycle notation, e.g. "(0 2 1)(3)".
std::string cycle_notation(const std::vector<Cycle>& cycles);

/// Key order: edge_count, surface, mode, total, entries. Entries keep
/// catalog order (ascending code).
nlohmann::ordered_json catalog_to_json(const Catalog& catalog);

/// One line per entry, no header.
std::string catalog_to_text(const Catalog& catalog);

/// A single undirected multigraph with one cluster subgraph per entry. The
/// rotation system and outer face ride along as comments and labels.
std::string catalog_to_dot(const Catalog& catalog);

/// Entry of a parsed catalog: the code string plus the labeled structure
/// it was emitted with.
struct ParsedEntry {
  std::string code;
  std::vector<Dart> rotation;
  std::vector<Dart> outer_face;  // empty for sphere entries
};

/// Reads back the output of catalog_to_json. Throws nlohmann::json
/// exceptions or std::invalid_argument on schema violations.
std::vector<ParsedEntry> parse_catalog_json(const std::string& text);

}  // namespace mapcensus
