#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "digitop/bitset.hpp"

namespace digitop {

// Index-level simple undirected graph stored as one bit row per point.
// Algorithms run on this type; DigitalSpace adds point names on top.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);

  const PointSet& neighbors(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  PointSet all() const { return PointSet::full(size()); }

  // Induced subgraph; kept points are renumbered in ascending index order.
  Graph induced(const PointSet& keep) const;
  Graph without(std::size_t v) const;

  // Appends one isolated point and returns its index.
  std::size_t add_point();

  bool connected() const;

  // Renumbers points: point i of this graph becomes point perm[i].
  Graph permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<PointSet> rows_;
};

// Disjoint union plus all edges across; points of b follow points of a.
Graph join(const Graph& a, const Graph& b);

// Exhaustive clique counts f_1, f_2, ... (f_k = number of k-point cliques).
// Throws BudgetExceeded when more than max_cliques cliques would be listed.
std::vector<std::uint64_t> count_cliques(const Graph& g, std::uint64_t max_cliques);

std::int64_t euler_from_cliques(const std::vector<std::uint64_t>& counts);

}  // namespace digitop
