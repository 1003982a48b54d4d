#include "digitop/graph.hpp"

#include <cassert>
#include <string>

#include "digitop/errors.hpp"

namespace digitop {

Graph::Graph(std::size_t n) : rows_(n, PointSet(n)) {}

void Graph::add_edge(std::size_t i, std::size_t j) {
  assert(i != j);
  rows_[i].set(j);
  rows_[j].set(i);
}

void Graph::remove_edge(std::size_t i, std::size_t j) {
  rows_[i].reset(j);
  rows_[j].reset(i);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const PointSet& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    rows_[i].for_each([&](std::size_t j) {
      if (j > i) out.emplace_back(i, j);
    });
  }
  return out;
}

Graph Graph::induced(const PointSet& keep) const {
  const std::vector<std::size_t> kept = keep.to_vector();
  Graph out(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    const PointSet& row = rows_[kept[a]];
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (row.test(kept[b])) out.add_edge(a, b);
    }
  }
  return out;
}

Graph Graph::without(std::size_t v) const {
  PointSet keep = all();
  keep.reset(v);
  return induced(keep);
}

std::size_t Graph::add_point() {
  const std::size_t n = size() + 1;
  Graph grown(n);
  for (auto [i, j] : edges()) grown.add_edge(i, j);
  *this = std::move(grown);
  return n - 1;
}

bool Graph::connected() const {
  if (size() <= 1) return true;
  PointSet seen(size());
  PointSet frontier(size());
  seen.set(0);
  frontier.set(0);
  while (!frontier.empty()) {
    PointSet next(size());
    frontier.for_each([&](std::size_t v) { next |= rows_[v]; });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == size();
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  Graph out(size());
  for (auto [i, j] : edges()) out.add_edge(perm[i], perm[j]);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  const std::size_t na = a.size();
  Graph out(na + b.size());
  for (auto [i, j] : a.edges()) out.add_edge(i, j);
  for (auto [i, j] : b.edges()) out.add_edge(na + i, na + j);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.add_edge(i, na + j);
  }
  return out;
}

namespace {

struct CliqueCounter {
  const Graph& g;
  std::vector<PointSet> higher;  // neighbours with a larger index
  std::vector<PointSet> scratch;  // candidate set per depth
  std::vector<std::uint64_t> counts;
  std::uint64_t listed = 0;
  std::uint64_t limit;

  CliqueCounter(const Graph& graph, std::uint64_t max_cliques) : g(graph), limit(max_cliques) {
    const std::size_t n = g.size();
    higher.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      PointSet h = g.neighbors(v);
      for (std::size_t u = 0; u <= v; ++u) h.reset(u);
      higher.push_back(std::move(h));
    }
    scratch.assign(n + 1, PointSet(n));
    counts.assign(n, 0);
  }

  // Every clique is listed once, by extending with larger indices only.
  void extend(const PointSet& candidates, std::size_t depth) {
    candidates.for_each([&](std::size_t v) {
      if (++listed > limit) {
        throw BudgetExceeded("clique enumeration exceeded " + std::to_string(limit) +
                             " cliques");
      }
      ++counts[depth];
      PointSet& next = scratch[depth + 1];
      next = candidates;
      next &= higher[v];
      if (!next.empty()) extend(next, depth + 1);
    });
  }
};

}  // namespace

std::vector<std::uint64_t> count_cliques(const Graph& g, std::uint64_t max_cliques) {
  if (g.empty()) return {};
  CliqueCounter counter(g, max_cliques);
  counter.extend(g.all(), 0);
  std::vector<std::uint64_t> counts = std::move(counter.counts);
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::int64_t euler_from_cliques(const std::vector<std::uint64_t>& counts) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const auto f = static_cast<std::int64_t>(counts[k]);
    chi += (k % 2 == 0) ? f : -f;
  }
  return chi;
}

}  // namespace digitop
