#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digitop/graph.hpp"

namespace digitop {

// Nonempty string over [A-Za-z0-9_]. Ordered lexicographically.
using PointId = std::string;
using Edge = std::pair<PointId, PointId>;

bool is_valid_point_id(std::string_view id);

// A finite simple undirected graph with named points. Point index i is the
// i-th id in lexicographic order, so iteration is always in PointId order.
class DigitalSpace {
 public:
  DigitalSpace() = default;
  DigitalSpace(std::vector<PointId> points, const std::vector<Edge>& edges);

  // names[i] labels point i of g; names need not be sorted.
  static DigitalSpace from_graph(const Graph& g, std::vector<PointId> names);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<PointId>& points() const { return ids_; }
  const PointId& id(std::size_t index) const { return ids_[index]; }
  const Graph& graph() const { return graph_; }

  bool contains(std::string_view id) const;
  // Throws UnknownPointError.
  std::size_t index_of(std::string_view id) const;
  PointSet indices_of(const std::vector<PointId>& ids) const;
  std::vector<PointId> ids_of(const PointSet& set) const;

  bool adjacent(std::string_view a, std::string_view b) const;
  std::vector<PointId> neighbors(std::string_view id) const;
  std::size_t edge_count() const { return graph_.edge_count(); }
  // Each edge once as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const DigitalSpace& a, const DigitalSpace& b) = default;

 private:
  std::vector<PointId> ids_;
  Graph graph_;
};

struct CliqueVector {
  std::vector<std::uint64_t> counts;  // counts[k-1] = f_k
  std::int64_t euler() const { return euler_from_cliques(counts); }
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 50'000'000;

DigitalSpace induced_subspace(const DigitalSpace& g, const std::vector<PointId>& keep);
DigitalSpace delete_points(const DigitalSpace& g, const std::vector<PointId>& remove);
DigitalSpace rim(const DigitalSpace& g, std::string_view v);
DigitalSpace ball(const DigitalSpace& g, std::string_view v);
DigitalSpace joint_rim(const DigitalSpace& g, std::string_view v, std::string_view u);
// Point ids must be disjoint; throws PreconditionError otherwise.
DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h);
bool is_connected(const DigitalSpace& g);

CliqueVector clique_vector(const Graph& g, std::uint64_t max_cliques = kDefaultCliqueBudget);
CliqueVector clique_vector(const DigitalSpace& g,
                           std::uint64_t max_cliques = kDefaultCliqueBudget);
std::int64_t euler_characteristic(const Graph& g);
std::int64_t euler_characteristic(const DigitalSpace& g);

// Copy with every id prefixed; used before join / connected sum.
DigitalSpace with_prefix(const DigitalSpace& g, std::string_view prefix);
// Smallest "<prefix><k>" (k = 0, 1, ...) not already a point of g.
PointId fresh_id(const DigitalSpace& g, std::string_view prefix);

}  // namespace digitop
