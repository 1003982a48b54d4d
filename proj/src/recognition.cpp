#include "digitop/recognition.hpp"

#include "digitop/canonical.hpp"
#include "digitop/memo.hpp"

namespace digitop {
namespace {

bool is_two_isolated_points(const Graph& g) { return g.size() == 2 && !g.adjacent(0, 1); }

Graph rim_of(const Graph& g, std::size_t v) { return g.induced(g.neighbors(v)); }

std::optional<int> sphere_uncached(const Graph& g, const CanonicalLabeling* labeling,
                                   const RecognitionOptions& opts) {
  const std::size_t n = g.size();
  if (is_two_isolated_points(g)) return 0;
  // The smallest n-sphere for n >= 1 is the 4-cycle.
  if (n < 4 || !g.connected()) return std::nullopt;

  std::optional<int> rim_dim = recognize_sphere(rim_of(g, 0), opts);
  if (!rim_dim) return std::nullopt;
  for (std::size_t v = 1; v < n; ++v) {
    if (recognize_sphere(rim_of(g, v), opts) != rim_dim) return std::nullopt;
  }

  std::vector<std::size_t> orbit;
  if (opts.orbit_pruning && labeling != nullptr) {
    orbit = orbit_labels(n, labeling->generators);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!orbit.empty() && orbit[v] != v) continue;
    if (!is_contractible(g.without(v), opts.search)) return std::nullopt;
  }
  return *rim_dim + 1;
}

std::vector<std::optional<int>> rim_sphere_dims(const Graph& g, const RecognitionOptions& opts) {
  std::vector<std::optional<int>> dims(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) dims[v] = recognize_sphere(rim_of(g, v), opts);
  return dims;
}

}  // namespace

std::string_view kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kSphere:
      return "SPHERE";
    case SpaceKind::kDisk:
      return "DISK";
    case SpaceKind::kClosedManifold:
      return "CLOSED-MANIFOLD";
    case SpaceKind::kManifoldWithBoundary:
      return "MANIFOLD-WITH-BOUNDARY";
    case SpaceKind::kNone:
      return "NONE";
  }
  return "NONE";
}

std::optional<int> recognize_sphere(const Graph& g, const RecognitionOptions& opts) {
  if (g.size() < 4) return is_two_isolated_points(g) ? std::optional<int>(0) : std::nullopt;
  if (!opts.memoize) return sphere_uncached(g, nullptr, opts);
  const CanonicalLabeling labeling = canonical_labeling(g);
  if (auto hit = sphere_cache().get(labeling.code)) {
    return *hit < 0 ? std::nullopt : std::optional<int>(*hit);
  }
  const std::optional<int> dim = sphere_uncached(g, &labeling, opts);
  sphere_cache().put(labeling.code, dim.value_or(-1));
  return dim;
}

std::optional<int> cone_sphere_dimension(const Graph& g, const PointSet& boundary,
                                         const RecognitionOptions& opts) {
  Graph cone = g;
  const std::size_t apex = cone.add_point();
  boundary.for_each([&](std::size_t b) { cone.add_edge(apex, b); });
  return recognize_sphere(cone, opts);
}

std::optional<BoundedShape> recognize_disk(const Graph& g, const RecognitionOptions& opts) {
  const std::size_t n = g.size();
  if (n == 1) return BoundedShape{0, PointSet(1), PointSet::full(1)};
  if (n < 3 || !is_contractible(g, opts.search)) return std::nullopt;

  const std::vector<std::optional<int>> dims = rim_sphere_dims(g, opts);
  std::optional<int> rim_dim;
  for (const auto& d : dims) {
    if (d) {
      rim_dim = d;
      break;
    }
  }
  if (!rim_dim) return std::nullopt;

  PointSet interior(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (dims[v] == rim_dim) interior.set(v);
  }
  PointSet boundary = g.all() - interior;
  if (boundary.empty()) return std::nullopt;
  if (recognize_sphere(g.induced(boundary), opts) != rim_dim) return std::nullopt;
  const int dim = *rim_dim + 1;
  if (cone_sphere_dimension(g, boundary, opts) != dim) return std::nullopt;
  return BoundedShape{dim, std::move(boundary), std::move(interior)};
}

std::optional<int> recognize_closed_manifold(const Graph& g, const RecognitionOptions& opts) {
  if (is_two_isolated_points(g)) return 0;
  if (g.size() < 4 || !g.connected()) return std::nullopt;
  const std::optional<int> rim_dim = recognize_sphere(rim_of(g, 0), opts);
  if (!rim_dim) return std::nullopt;
  for (std::size_t v = 1; v < g.size(); ++v) {
    if (recognize_sphere(rim_of(g, v), opts) != rim_dim) return std::nullopt;
  }
  return *rim_dim + 1;
}

std::optional<BoundedShape> recognize_manifold_with_boundary(const Graph& g,
                                                             const RecognitionOptions& opts) {
  const std::size_t n = g.size();
  if (n < 3 || !g.connected()) return std::nullopt;
  const std::vector<std::optional<int>> dims = rim_sphere_dims(g, opts);
  std::optional<int> rim_dim;
  for (const auto& d : dims) {
    if (d) {
      rim_dim = d;
      break;
    }
  }
  if (!rim_dim) return std::nullopt;

  PointSet interior(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (dims[v] == rim_dim) interior.set(v);
  }
  PointSet boundary = g.all() - interior;
  if (boundary.empty()) return std::nullopt;
  bool rims_ok = true;
  boundary.for_each([&](std::size_t v) {
    if (!rims_ok) return;
    const auto disk = recognize_disk(rim_of(g, v), opts);
    if (!disk || disk->dimension != *rim_dim) rims_ok = false;
  });
  if (!rims_ok) return std::nullopt;
  if (recognize_sphere(g.induced(boundary), opts) != rim_dim) return std::nullopt;
  return BoundedShape{*rim_dim + 1, std::move(boundary), std::move(interior)};
}

std::optional<int> recognize_sphere(const DigitalSpace& g, const RecognitionOptions& opts) {
  return recognize_sphere(g.graph(), opts);
}

namespace {

RecognitionResult named(const DigitalSpace& g, SpaceKind kind,
                        const std::optional<BoundedShape>& shape) {
  RecognitionResult r;
  if (!shape) return r;
  r.kind = kind;
  r.dimension = shape->dimension;
  r.boundary = g.ids_of(shape->boundary);
  r.interior = g.ids_of(shape->interior);
  return r;
}

}  // namespace

RecognitionResult recognize_disk(const DigitalSpace& g, const RecognitionOptions& opts) {
  return named(g, SpaceKind::kDisk, recognize_disk(g.graph(), opts));
}

std::optional<int> recognize_closed_manifold(const DigitalSpace& g,
                                             const RecognitionOptions& opts) {
  return recognize_closed_manifold(g.graph(), opts);
}

RecognitionResult recognize_manifold_with_boundary(const DigitalSpace& g,
                                                   const RecognitionOptions& opts) {
  return named(g, SpaceKind::kManifoldWithBoundary,
               recognize_manifold_with_boundary(g.graph(), opts));
}

RecognitionResult recognize(const DigitalSpace& g, const RecognitionOptions& opts) {
  if (auto d = recognize_sphere(g, opts)) return RecognitionResult{SpaceKind::kSphere, d, {}, {}};
  if (auto d = recognize_closed_manifold(g, opts)) {
    return RecognitionResult{SpaceKind::kClosedManifold, d, {}, {}};
  }
  if (RecognitionResult r = recognize_disk(g, opts); r.kind != SpaceKind::kNone) return r;
  return recognize_manifold_with_boundary(g, opts);
}

}  // namespace digitop
