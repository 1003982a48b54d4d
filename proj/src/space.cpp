#include "digitop/space.hpp"

#include <algorithm>
#include <numeric>

#include "digitop/errors.hpp"

namespace digitop {

bool is_valid_point_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

DigitalSpace::DigitalSpace(std::vector<PointId> points, const std::vector<Edge>& edges)
    : ids_(std::move(points)) {
  for (const PointId& p : ids_) {
    if (!is_valid_point_id(p)) throw PreconditionError("invalid point id '" + p + "'");
  }
  std::sort(ids_.begin(), ids_.end());
  if (auto dup = std::adjacent_find(ids_.begin(), ids_.end()); dup != ids_.end()) {
    throw PreconditionError("duplicate point '" + *dup + "'");
  }
  graph_ = Graph(ids_.size());
  for (const auto& [a, b] : edges) {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    if (i == j) throw PreconditionError("self-loop at '" + a + "'");
    graph_.add_edge(i, j);
  }
}

DigitalSpace DigitalSpace::from_graph(const Graph& g, std::vector<PointId> names) {
  if (names.size() != g.size()) throw PreconditionError("name count does not match graph size");
  std::vector<std::size_t> by_name(names.size());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(),
            [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> perm(names.size());
  DigitalSpace out;
  out.ids_.reserve(names.size());
  for (std::size_t pos = 0; pos < by_name.size(); ++pos) {
    perm[by_name[pos]] = pos;
    out.ids_.push_back(std::move(names[by_name[pos]]));
  }
  for (const PointId& p : out.ids_) {
    if (!is_valid_point_id(p)) throw PreconditionError("invalid point id '" + p + "'");
  }
  if (auto dup = std::adjacent_find(out.ids_.begin(), out.ids_.end()); dup != out.ids_.end()) {
    throw PreconditionError("duplicate point '" + *dup + "'");
  }
  out.graph_ = g.permuted(perm);
  return out;
}

bool DigitalSpace::contains(std::string_view id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t DigitalSpace::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw UnknownPointError(std::string(id));
  return static_cast<std::size_t>(it - ids_.begin());
}

PointSet DigitalSpace::indices_of(const std::vector<PointId>& ids) const {
  PointSet s(size());
  for (const PointId& id : ids) s.set(index_of(id));
  return s;
}

std::vector<PointId> DigitalSpace::ids_of(const PointSet& set) const {
  std::vector<PointId> out;
  set.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
  return out;
}

bool DigitalSpace::adjacent(std::string_view a, std::string_view b) const {
  return graph_.adjacent(index_of(a), index_of(b));
}

std::vector<PointId> DigitalSpace::neighbors(std::string_view id) const {
  return ids_of(graph_.neighbors(index_of(id)));
}

std::vector<Edge> DigitalSpace::edges() const {
  std::vector<Edge> out;
  for (auto [i, j] : graph_.edges()) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

namespace {

DigitalSpace restrict_to(const DigitalSpace& g, const PointSet& keep) {
  return DigitalSpace::from_graph(g.graph().induced(keep), g.ids_of(keep));
}

}  // namespace

DigitalSpace induced_subspace(const DigitalSpace& g, const std::vector<PointId>& keep) {
  return restrict_to(g, g.indices_of(keep));
}

DigitalSpace delete_points(const DigitalSpace& g, const std::vector<PointId>& remove) {
  return restrict_to(g, g.graph().all() - g.indices_of(remove));
}

DigitalSpace rim(const DigitalSpace& g, std::string_view v) {
  return restrict_to(g, g.graph().neighbors(g.index_of(v)));
}

DigitalSpace ball(const DigitalSpace& g, std::string_view v) {
  const std::size_t i = g.index_of(v);
  PointSet keep = g.graph().neighbors(i);
  keep.set(i);
  return restrict_to(g, keep);
}

DigitalSpace joint_rim(const DigitalSpace& g, std::string_view v, std::string_view u) {
  const std::size_t i = g.index_of(v);
  const std::size_t j = g.index_of(u);
  if (i == j) throw PreconditionError("joint rim needs two distinct points");
  return restrict_to(g, g.graph().neighbors(i) & g.graph().neighbors(j));
}

DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h) {
  for (const PointId& p : h.points()) {
    if (g.contains(p)) throw PreconditionError("join: point id '" + p + "' occurs in both spaces");
  }
  std::vector<PointId> names = g.points();
  names.insert(names.end(), h.points().begin(), h.points().end());
  return DigitalSpace::from_graph(join(g.graph(), h.graph()), std::move(names));
}

bool is_connected(const DigitalSpace& g) { return g.graph().connected(); }

CliqueVector clique_vector(const Graph& g, std::uint64_t max_cliques) {
  return CliqueVector{count_cliques(g, max_cliques)};
}

CliqueVector clique_vector(const DigitalSpace& g, std::uint64_t max_cliques) {
  return clique_vector(g.graph(), max_cliques);
}

std::int64_t euler_characteristic(const Graph& g) { return clique_vector(g).euler(); }

std::int64_t euler_characteristic(const DigitalSpace& g) { return clique_vector(g).euler(); }

DigitalSpace with_prefix(const DigitalSpace& g, std::string_view prefix) {
  std::vector<PointId> names;
  names.reserve(g.size());
  for (const PointId& p : g.points()) names.push_back(std::string(prefix) + p);
  return DigitalSpace::from_graph(g.graph(), std::move(names));
}

PointId fresh_id(const DigitalSpace& g, std::string_view prefix) {
  for (std::size_t k = 0;; ++k) {
    PointId candidate = std::string(prefix) + std::to_string(k);
    if (!g.contains(candidate)) return candidate;
  }
}

}  // namespace digitop
