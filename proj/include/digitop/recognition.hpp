#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "digitop/homotopy.hpp"
#include "digitop/space.hpp"

namespace digitop {

enum class SpaceKind { kSphere, kDisk, kClosedManifold, kManifoldWithBoundary, kNone };

std::string_view kind_name(SpaceKind kind);

struct RecognitionResult {
  SpaceKind kind = SpaceKind::kNone;
  std::optional<int> dimension;
  // Populated for kDisk and kManifoldWithBoundary.
  std::vector<PointId> boundary;
  std::vector<PointId> interior;
};

struct RecognitionOptions {
  SearchOptions search;
  bool memoize = true;
  // Check punctured contractibility on one point per automorphism orbit.
  bool orbit_pruning = true;
};

// Index-level results; boundary/interior are point index sets.
struct BoundedShape {
  int dimension = 0;
  PointSet boundary;
  PointSet interior;
};

std::optional<int> recognize_sphere(const Graph& g, const RecognitionOptions& opts = {});
std::optional<BoundedShape> recognize_disk(const Graph& g, const RecognitionOptions& opts = {});
std::optional<int> recognize_closed_manifold(const Graph& g,
                                             const RecognitionOptions& opts = {});
std::optional<BoundedShape> recognize_manifold_with_boundary(
    const Graph& g, const RecognitionOptions& opts = {});

// Cone test: adds one point adjacent to exactly `boundary` and asks whether
// the result is a sphere. Returns its dimension.
std::optional<int> cone_sphere_dimension(const Graph& g, const PointSet& boundary,
                                         const RecognitionOptions& opts = {});

std::optional<int> recognize_sphere(const DigitalSpace& g, const RecognitionOptions& opts = {});
RecognitionResult recognize_disk(const DigitalSpace& g, const RecognitionOptions& opts = {});
std::optional<int> recognize_closed_manifold(const DigitalSpace& g,
                                             const RecognitionOptions& opts = {});
RecognitionResult recognize_manifold_with_boundary(const DigitalSpace& g,
                                                   const RecognitionOptions& opts = {});

// Most specific of sphere, closed manifold, disk, manifold with boundary.
RecognitionResult recognize(const DigitalSpace& g, const RecognitionOptions& opts = {});

}  // namespace digitop
