#include "digitop/transform.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <string>

#include "digitop/canonical.hpp"
#include "digitop/errors.hpp"

namespace digitop {
namespace {

int require_manifold(const Graph& g, const RecognitionOptions& opts) {
  const std::optional<int> dim = recognize_closed_manifold(g, opts);
  if (!dim) throw PreconditionError("space is not a closed manifold");
  return *dim;
}

[[maybe_unused]] void check_manifold_preserved(const DigitalSpace& before,
                                               const DigitalSpace& after, int dim,
                                               const RecognitionOptions& opts) {
#ifndef NDEBUG
  assert(recognize_closed_manifold(after.graph(), opts) == dim);
  assert(euler_characteristic(before) == euler_characteristic(after));
#else
  (void)before;
  (void)after;
  (void)dim;
  (void)opts;
#endif
}

PointSet ball_union(const Graph& g, std::size_t v, std::size_t u) {
  PointSet s = g.neighbors(v) | g.neighbors(u);
  s.set(v);
  s.set(u);
  return s;
}

// The disk interior must be exactly {v, u}: the boundary O(v) ∪ O(u) - {v, u}
// is an (n-1)-sphere and coning it off inside the ball union gives an
// n-sphere.
bool is_edge_disk(const Graph& g, std::size_t v, std::size_t u, int dim,
                  const RecognitionOptions& opts) {
  PointSet disk = ball_union(g, v, u);
  PointSet boundary = disk;
  boundary.reset(v);
  boundary.reset(u);
  if (recognize_sphere(g.induced(boundary), opts) != dim - 1) return false;
  // Re-index the boundary inside the disk subgraph.
  const std::vector<std::size_t> members = disk.to_vector();
  PointSet local_boundary(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] != v && members[k] != u) local_boundary.set(k);
  }
  return cone_sphere_dimension(g.induced(disk), local_boundary, opts) == dim;
}

// Interior points replaced by a fresh point adjacent to the boundary.
DigitalSpace replace_interior(const DigitalSpace& m, const PointSet& interior,
                              const PointSet& boundary, const PointId& fresh) {
  const Graph& g = m.graph();
  const PointSet keep = g.all() - interior;
  Graph h = g.induced(keep);
  std::vector<PointId> names = m.ids_of(keep);
  const std::vector<std::size_t> kept = keep.to_vector();
  const std::size_t z = h.add_point();
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (boundary.test(kept[k])) h.add_edge(z, k);
  }
  names.push_back(fresh);
  return DigitalSpace::from_graph(h, std::move(names));
}

ContractionStep contract_edge_disk(DigitalSpace& cur, std::size_t v, std::size_t u) {
  const Graph& g = cur.graph();
  PointSet interior(g.size());
  interior.set(v);
  interior.set(u);
  const PointSet boundary = ball_union(g, v, u) - interior;
  ContractionStep step{cur.ids_of(interior), cur.ids_of(boundary), fresh_id(cur, "z")};
  cur = replace_interior(cur, interior, boundary, step.new_point);
  return step;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_disk_indices(
    const Graph& g, int dim, const RecognitionOptions& opts, bool first_only) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [v, u] : g.edges()) {
    if (is_edge_disk(g, v, u, dim, opts)) {
      out.emplace_back(v, u);
      if (first_only) break;
    }
  }
  return out;
}

}  // namespace

DigitalSpace r_transform(const DigitalSpace& m, std::string_view v, std::string_view u,
                         const PointId& fresh, const RecognitionOptions& opts) {
  const std::size_t i = m.index_of(v);
  const std::size_t j = m.index_of(u);
  if (i == j || !m.graph().adjacent(i, j)) {
    throw PreconditionError("(" + std::string(v) + "," + std::string(u) + ") is not an edge");
  }
  if (m.contains(fresh)) throw PreconditionError("point '" + fresh + "' already exists");
  if (!is_valid_point_id(fresh)) throw PreconditionError("invalid point id '" + fresh + "'");
  const int dim = require_manifold(m.graph(), opts);

  Graph h = m.graph();
  const PointSet common = h.neighbors(i) & h.neighbors(j);
  const std::size_t x = h.add_point();
  h.add_edge(x, i);
  h.add_edge(x, j);
  common.for_each([&](std::size_t c) { h.add_edge(x, c); });
  h.remove_edge(i, j);
  std::vector<PointId> names = m.points();
  names.push_back(fresh);
  DigitalSpace out = DigitalSpace::from_graph(h, std::move(names));
  check_manifold_preserved(m, out, dim, opts);
  return out;
}

DigitalSpace contract_disk(const DigitalSpace& m, const std::vector<PointId>& disk_points,
                           const PointId& fresh, ContractionStep* step,
                           const RecognitionOptions& opts) {
  if (m.contains(fresh)) throw PreconditionError("point '" + fresh + "' already exists");
  if (!is_valid_point_id(fresh)) throw PreconditionError("invalid point id '" + fresh + "'");
  const int dim = require_manifold(m.graph(), opts);
  const PointSet disk = m.indices_of(disk_points);
  const std::optional<BoundedShape> shape = recognize_disk(m.graph().induced(disk), opts);
  if (!shape) throw PreconditionError("points do not span a disk");
  if (shape->dimension != dim) {
    throw PreconditionError("disk dimension " + std::to_string(shape->dimension) +
                            " does not match manifold dimension " + std::to_string(dim));
  }
  const std::vector<std::size_t> members = disk.to_vector();
  PointSet interior(m.size());
  PointSet boundary(m.size());
  shape->interior.for_each([&](std::size_t k) { interior.set(members[k]); });
  shape->boundary.for_each([&](std::size_t k) { boundary.set(members[k]); });
  DigitalSpace out = replace_interior(m, interior, boundary, fresh);
  if (step != nullptr) *step = ContractionStep{m.ids_of(interior), m.ids_of(boundary), fresh};
  check_manifold_preserved(m, out, dim, opts);
  return out;
}

std::vector<std::pair<PointId, PointId>> find_edge_disks(const DigitalSpace& m,
                                                         const RecognitionOptions& opts) {
  const int dim = require_manifold(m.graph(), opts);
  std::vector<std::pair<PointId, PointId>> out;
  for (auto [v, u] : edge_disk_indices(m.graph(), dim, opts, false)) {
    out.emplace_back(m.id(v), m.id(u));
  }
  return out;
}

CompressionResult compress(const DigitalSpace& m, const RecognitionOptions& opts) {
  const int dim = require_manifold(m.graph(), opts);
  CompressionResult result;
  result.space = m;
  while (true) {
    const auto found = edge_disk_indices(result.space.graph(), dim, opts, true);
    if (found.empty()) break;
    result.steps.push_back(contract_edge_disk(result.space, found[0].first, found[0].second));
  }
  result.edge_compressed = true;
  return result;
}

CompressionResult compress_random_order(const DigitalSpace& m, std::uint64_t seed,
                                        const RecognitionOptions& opts) {
  const int dim = require_manifold(m.graph(), opts);
  std::mt19937_64 rng(seed);
  CompressionResult result;
  result.space = m;
  while (true) {
    const auto found = edge_disk_indices(result.space.graph(), dim, opts, false);
    if (found.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
    const auto [v, u] = found[pick(rng)];
    result.steps.push_back(contract_edge_disk(result.space, v, u));
  }
  result.edge_compressed = true;
  return result;
}

std::string_view verdict_name(CompressedVerdict verdict) {
  switch (verdict) {
    case CompressedVerdict::kEdgeCompressed:
      return "EDGE-COMPRESSED";
    case CompressedVerdict::kCompressedUpToBound:
      return "COMPRESSED-UP-TO-BOUND";
    case CompressedVerdict::kNotCompressed:
      return "NOT-COMPRESSED";
  }
  return "NOT-COMPRESSED";
}

CompressedCheck is_compressed(const DigitalSpace& m, std::size_t interior_bound,
                              const RecognitionOptions& opts) {
  const int dim = require_manifold(m.graph(), opts);
  const Graph& g = m.graph();
  const std::size_t n = g.size();

  // Connected interiors of growing size, deduplicated as sorted index lists.
  std::set<std::vector<std::size_t>> layer;
  for (auto [v, u] : g.edges()) layer.insert({v, u});
  for (std::size_t size = 2; size <= interior_bound && !layer.empty(); ++size) {
    for (const std::vector<std::size_t>& members : layer) {
      PointSet interior = PointSet::of(n, members);
      PointSet disk = interior;
      for (std::size_t x : members) disk |= g.neighbors(x);
      const PointSet boundary = disk - interior;
      if (boundary.empty()) continue;
      if (recognize_sphere(g.induced(boundary), opts) != dim - 1) continue;
      const std::vector<std::size_t> disk_members = disk.to_vector();
      PointSet local_boundary(disk_members.size());
      for (std::size_t k = 0; k < disk_members.size(); ++k) {
        if (boundary.test(disk_members[k])) local_boundary.set(k);
      }
      if (cone_sphere_dimension(g.induced(disk), local_boundary, opts) == dim) {
        return CompressedCheck{CompressedVerdict::kNotCompressed, m.ids_of(disk),
                               m.ids_of(interior)};
      }
    }
    if (size == interior_bound) break;
    std::set<std::vector<std::size_t>> next;
    for (const std::vector<std::size_t>& members : layer) {
      PointSet frontier(n);
      for (std::size_t x : members) frontier |= g.neighbors(x);
      frontier -= PointSet::of(n, members);
      frontier.for_each([&](std::size_t y) {
        std::vector<std::size_t> grown = members;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), y), y);
        next.insert(std::move(grown));
      });
    }
    layer = std::move(next);
  }
  return CompressedCheck{interior_bound <= 2 ? CompressedVerdict::kEdgeCompressed
                                             : CompressedVerdict::kCompressedUpToBound,
                         {},
                         {}};
}

DigitalSpace connected_sum(const DigitalSpace& m, std::string_view v, const DigitalSpace& n,
                           std::string_view u,
                           std::optional<std::map<PointId, PointId>> matching,
                           const RecognitionOptions& opts) {
  const std::size_t vi = m.index_of(v);
  const std::size_t ui = n.index_of(u);
  const std::vector<PointId> rim_m = m.ids_of(m.graph().neighbors(vi));
  const std::vector<PointId> rim_n = n.ids_of(n.graph().neighbors(ui));

  if (!matching) {
    const Graph ga = m.graph().induced(m.graph().neighbors(vi));
    const Graph gb = n.graph().induced(n.graph().neighbors(ui));
    const std::optional<Permutation> iso = find_isomorphism(ga, gb);
    if (!iso) throw PreconditionError("rims are not isomorphic");
    matching.emplace();
    for (std::size_t k = 0; k < rim_m.size(); ++k) (*matching)[rim_m[k]] = rim_n[(*iso)[k]];
  }

  // Validate: a bijection rim_m -> rim_n preserving adjacency.
  if (matching->size() != rim_m.size() || rim_m.size() != rim_n.size()) {
    throw PreconditionError("matching is not a bijection between the rims");
  }
  std::map<PointId, PointId> inverse;
  for (const PointId& a : rim_m) {
    auto it = matching->find(a);
    if (it == matching->end()) throw PreconditionError("matching misses rim point '" + a + "'");
    const PointId& b = it->second;
    if (!std::binary_search(rim_n.begin(), rim_n.end(), b) || inverse.count(b) != 0) {
      throw PreconditionError("matching is not a bijection between the rims");
    }
    inverse[b] = a;
  }
  for (const PointId& a : rim_m) {
    for (const PointId& b : rim_m) {
      if (a < b && m.adjacent(a, b) != n.adjacent(matching->at(a), matching->at(b))) {
        throw PreconditionError("matching is not a rim isomorphism");
      }
    }
  }

  std::vector<PointId> names;
  for (const PointId& p : m.points()) {
    if (p != v) names.push_back(p);
  }
  for (const PointId& p : n.points()) {
    if (p == u || inverse.count(p) != 0) continue;
    if (m.contains(p)) throw PreconditionError("point id '" + p + "' occurs in both spaces");
    names.push_back(p);
  }
  auto image = [&](const PointId& p) -> const PointId& {
    auto it = inverse.find(p);
    return it == inverse.end() ? p : it->second;
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : m.edges()) {
    if (a != v && b != v) edges.emplace_back(a, b);
  }
  std::set<std::pair<PointId, PointId>> seen(edges.begin(), edges.end());
  for (const auto& [a, b] : n.edges()) {
    if (a == u || b == u) continue;
    PointId x = image(a);
    PointId y = image(b);
    if (x > y) std::swap(x, y);
    if (seen.insert({x, y}).second) edges.emplace_back(x, y);
  }
  (void)opts;
  return DigitalSpace(std::move(names), edges);
}

}  // namespace digitop
