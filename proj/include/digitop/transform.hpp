#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "digitop/recognition.hpp"
#include "digitop/space.hpp"

namespace digitop {

// Replaces edge (v, u) of a closed manifold by a fresh point adjacent to v,
// u and their common neighbours; the edge itself is removed.
DigitalSpace r_transform(const DigitalSpace& m, std::string_view v, std::string_view u,
                         const PointId& fresh, const RecognitionOptions& opts = {});

struct ContractionStep {
  std::vector<PointId> interior_removed;
  std::vector<PointId> boundary;
  PointId new_point;
};

// Replaces the interior of the disk spanned by disk_points with one fresh
// point adjacent to exactly the disk boundary.
DigitalSpace contract_disk(const DigitalSpace& m, const std::vector<PointId>& disk_points,
                           const PointId& fresh, ContractionStep* step = nullptr,
                           const RecognitionOptions& opts = {});

// Edges whose ball union is a disk with interior exactly {v, u}.
std::vector<std::pair<PointId, PointId>> find_edge_disks(const DigitalSpace& m,
                                                         const RecognitionOptions& opts = {});

struct CompressionResult {
  DigitalSpace space;
  std::vector<ContractionStep> steps;
  bool edge_compressed = false;
};

// Contracts the first edge-disk in PointId order until none is left.
// Fresh points are named "z<k>" with the smallest unused k.
CompressionResult compress(const DigitalSpace& m, const RecognitionOptions& opts = {});

// Compression that picks uniformly among the edge-disks at each step. Used
// to probe whether the compressed form depends on the contraction order.
CompressionResult compress_random_order(const DigitalSpace& m, std::uint64_t seed,
                                        const RecognitionOptions& opts = {});

enum class CompressedVerdict { kEdgeCompressed, kCompressedUpToBound, kNotCompressed };

std::string_view verdict_name(CompressedVerdict verdict);

struct CompressedCheck {
  CompressedVerdict verdict = CompressedVerdict::kEdgeCompressed;
  // Points of a witness disk when kNotCompressed.
  std::vector<PointId> witness_disk;
  std::vector<PointId> witness_interior;
};

// Searches disks whose interior is a connected set of 2..interior_bound
// points; each candidate disk is the union of the interior points' balls.
CompressedCheck is_compressed(const DigitalSpace& m, std::size_t interior_bound,
                              const RecognitionOptions& opts = {});

// Glues m - v and n - u along a rim isomorphism (rim(m, v) -> rim(n, u)).
// Without a matching the first isomorphism found is used.
DigitalSpace connected_sum(const DigitalSpace& m, std::string_view v, const DigitalSpace& n,
                           std::string_view u,
                           std::optional<std::map<PointId, PointId>> matching = std::nullopt,
                           const RecognitionOptions& opts = {});

}  // namespace digitop
