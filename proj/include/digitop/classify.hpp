#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digitop/canonical.hpp"
#include "digitop/recognition.hpp"
#include "digitop/space.hpp"

namespace digitop {

// Point count of the compression.
std::size_t complexity(const DigitalSpace& m, const RecognitionOptions& opts = {});

struct ClassificationReport {
  std::size_t point_count = 0;
  int dimension = 0;
  std::int64_t euler = 0;
  std::size_t complexity = 0;
  DigitalSpace compression;
  CanonicalForm compression_form;
  // M minus its first point, reduced by simple point and edge deletions.
  PointId punctured_point;
  DigitalSpace punctured_reduced;
  CanonicalForm punctured_form;
  std::int64_t punctured_euler = 0;
};

ClassificationReport classification_report(const DigitalSpace& m,
                                           const RecognitionOptions& opts = {});

struct CatalogEntry {
  CanonicalForm form;
  DigitalSpace space;  // points v0, v1, ... in canonical order
  std::size_t points = 0;
  std::int64_t euler = 0;
};

struct CatalogBudget {
  // Distinct graphs kept across all generation levels.
  std::uint64_t max_graphs = 20'000'000;
  // Wall-clock limit; 0 disables it.
  double max_seconds = 0.0;
};

struct Catalog {
  int dimension = 0;
  std::size_t max_points = 0;
  std::vector<CatalogEntry> entries;  // sorted by (points, encoding)
  bool exhaustive = false;
  std::uint64_t graphs_generated = 0;
};

// Compressed closed n-manifolds with 2n+2 .. N points, up to isomorphism.
// Graphs are grown one point at a time and deduplicated by canonical code;
// partial graphs are pruned when some rim cannot lie inside an
// (n-1)-sphere or some degree can no longer reach 2n.
Catalog catalog(int n, std::size_t max_points, const CatalogBudget& budget = {},
                const RecognitionOptions& opts = {});

// One line per entry: "<points> <euler> <canonical hex>", after a header.
std::string catalog_listing(const Catalog& c);

enum class MatchKind { kMember, kCompressesTo, kUnmatched };

std::string_view match_name(MatchKind kind);

struct CatalogMatch {
  MatchKind kind = MatchKind::kUnmatched;
  std::optional<std::size_t> entry;  // index into Catalog::entries
};

CatalogMatch classify_against_catalog(const DigitalSpace& m, const Catalog& c,
                                      const RecognitionOptions& opts = {});

}  // namespace digitop
