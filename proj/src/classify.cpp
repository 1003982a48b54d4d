#include "digitop/classify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/transform.hpp"

namespace digitop {

std::size_t complexity(const DigitalSpace& m, const RecognitionOptions& opts) {
  return compress(m, opts).space.size();
}

ClassificationReport classification_report(const DigitalSpace& m,
                                           const RecognitionOptions& opts) {
  const std::optional<int> dim = recognize_closed_manifold(m, opts);
  if (!dim) throw PreconditionError("space is not a closed manifold");
  ClassificationReport r;
  r.point_count = m.size();
  r.dimension = *dim;
  r.euler = euler_characteristic(m);
  CompressionResult compressed = compress(m, opts);
  r.complexity = compressed.space.size();
  r.compression_form = canonical_form(compressed.space);
  r.compression = std::move(compressed.space);
  r.punctured_point = m.id(0);
  ReductionOptions reduction;
  reduction.search = opts.search;
  Reduction reduced = reduce(delete_points(m, {r.punctured_point}), reduction);
  if (reduced.budget_hit) throw BudgetExceeded("reduction of the punctured space hit its budget");
  r.punctured_form = canonical_form(reduced.space);
  r.punctured_euler = euler_characteristic(reduced.space);
  r.punctured_reduced = std::move(reduced.space);
  return r;
}

namespace {

constexpr std::size_t kMaxCatalogPoints = 24;

using Mask = std::uint64_t;

struct SmallGraph {
  std::vector<Mask> adj;
};

int popcount(Mask m) { return std::popcount(m); }

// Necessary condition for the induced subgraph on `set` to embed as an
// induced subgraph of some k-sphere (k = -1 means the empty space).
bool fits_in_sphere(const std::vector<Mask>& adj, Mask set, int k) {
  if (k < 0) return set == 0;
  if (k == 0) {
    if (popcount(set) > 2) return false;
    for (Mask s = set; s != 0; s &= s - 1) {
      if ((adj[static_cast<std::size_t>(std::countr_zero(s))] & set) != 0) return false;
    }
    return true;
  }
  for (Mask s = set; s != 0; s &= s - 1) {
    const auto w = static_cast<std::size_t>(std::countr_zero(s));
    if (!fits_in_sphere(adj, adj[w] & set, k - 1)) return false;
  }
  if (k == 1) {
    // Paths and cycles remain; a cycle inside a cycle is the whole cycle.
    Mask remaining = set;
    int components = 0;
    bool has_cycle = false;
    while (remaining != 0) {
      Mask comp = remaining & (~remaining + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
          next |= adj[static_cast<std::size_t>(std::countr_zero(f))] & set;
        }
        frontier = next & ~comp;
        comp |= next;
      }
      ++components;
      bool all_degree_two = true;
      for (Mask c = comp; c != 0; c &= c - 1) {
        if (popcount(adj[static_cast<std::size_t>(std::countr_zero(c))] & set) != 2) {
          all_degree_two = false;
        }
      }
      if (all_degree_two) has_cycle = true;
      remaining &= ~comp;
    }
    if (has_cycle && components > 1) return false;
  }
  return true;
}

Graph to_graph(const SmallGraph& s) {
  Graph g(s.adj.size());
  for (std::size_t i = 0; i < s.adj.size(); ++i) {
    for (Mask m = s.adj[i]; m != 0; m &= m - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(m));
      if (j > i) g.add_edge(i, j);
    }
  }
  return g;
}

class CatalogGenerator {
 public:
  CatalogGenerator(int n, std::size_t max_points, const CatalogBudget& budget,
                   const RecognitionOptions& opts)
      : n_(n), max_points_(max_points), budget_(budget), opts_(opts) {}

  Catalog run() {
    Catalog out;
    out.dimension = n_;
    out.max_points = max_points_;
    start_ = std::chrono::steady_clock::now();
    std::vector<SmallGraph> level{SmallGraph{{0}}};
    bool complete = true;
    for (std::size_t size = 1; size <= max_points_ && complete; ++size) {
      for (const SmallGraph& g : level) consider_final(g, out);
      if (size == max_points_) break;
      std::vector<SmallGraph> next;
      std::unordered_set<std::string> seen;
      for (const SmallGraph& g : level) {
        if (!extend(g, next, seen)) {
          complete = false;
          break;
        }
      }
      level = std::move(next);
      if (level.empty()) break;
    }
    out.exhaustive = complete;
    out.graphs_generated = generated_;
    std::sort(out.entries.begin(), out.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                if (a.points != b.points) return a.points < b.points;
                return a.form.encoding < b.form.encoding;
              });
    return out;
  }

 private:
  bool over_budget() const {
    if (generated_ > budget_.max_graphs) return true;
    if (budget_.max_seconds > 0.0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  bool extend(const SmallGraph& g, std::vector<SmallGraph>& next,
              std::unordered_set<std::string>& seen) {
    const std::size_t k = g.adj.size();
    const std::size_t child_size = k + 1;
    const std::size_t slack = max_points_ - child_size;
    const Mask all = (Mask{1} << k) - 1;
    // n = 0 allows isolated points, every other dimension needs connected graphs.
    const Mask first = n_ == 0 ? 0 : 1;
    for (Mask s = first; s <= all; ++s) {
      if (!fits_in_sphere(g.adj, s, n_ - 1)) continue;
      SmallGraph child{g.adj};
      child.adj.push_back(s);
      bool ok = true;
      for (Mask t = s; t != 0; t &= t - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(t));
        child.adj[w] |= Mask{1} << k;
      }
      for (Mask t = s; t != 0 && ok; t &= t - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(t));
        ok = fits_in_sphere(child.adj, child.adj[w], n_ - 1);
      }
      if (!ok) continue;
      for (std::size_t w = 0; w < child_size && ok; ++w) {
        ok = static_cast<std::size_t>(popcount(child.adj[w])) + slack >=
             static_cast<std::size_t>(2 * n_);
      }
      if (!ok) continue;
      std::string code = canonical_code(to_graph(child));
      if (!seen.insert(std::move(code)).second) continue;
      ++generated_;
      if ((generated_ & 1023) == 0 && over_budget()) return false;
      if (generated_ > budget_.max_graphs) return false;
      next.push_back(std::move(child));
    }
    return true;
  }

  void consider_final(const SmallGraph& s, Catalog& out) const {
    const std::size_t size = s.adj.size();
    if (size < static_cast<std::size_t>(2 * n_ + 2)) return;
    for (Mask m : s.adj) {
      if (popcount(m) < 2 * n_) return;
    }
    const Graph g = to_graph(s);
    if (recognize_closed_manifold(g, opts_) != n_) return;
    std::vector<PointId> names;
    for (std::size_t i = 0; i < size; ++i) names.push_back("v" + std::to_string(i));
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<std::size_t> position(size);
    for (std::size_t pos = 0; pos < size; ++pos) position[lab.order[pos]] = pos;
    DigitalSpace space = DigitalSpace::from_graph(g.permuted(position), names);
    if (!find_edge_disks(space, opts_).empty()) return;
    CatalogEntry entry;
    entry.form = canonical_form(space);
    entry.points = size;
    entry.euler = euler_characteristic(space);
    entry.space = std::move(space);
    out.entries.push_back(std::move(entry));
  }

  int n_;
  std::size_t max_points_;
  CatalogBudget budget_;
  const RecognitionOptions& opts_;
  std::uint64_t generated_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Catalog catalog(int n, std::size_t max_points, const CatalogBudget& budget,
                const RecognitionOptions& opts) {
  if (n < 0) throw PreconditionError("dimension must be non-negative");
  if (max_points < static_cast<std::size_t>(2 * n + 2)) {
    throw PreconditionError("max points must be at least 2n+2");
  }
  if (max_points > kMaxCatalogPoints) {
    throw PreconditionError("catalog enumeration is capped at " +
                            std::to_string(kMaxCatalogPoints) + " points");
  }
  return CatalogGenerator(n, max_points, budget, opts).run();
}

std::string catalog_listing(const Catalog& c) {
  std::ostringstream out;
  out << "# catalog dim=" << c.dimension << " max_points=" << c.max_points
      << " exhaustive=" << (c.exhaustive ? "true" : "false") << " entries=" << c.entries.size()
      << "\n";
  for (const CatalogEntry& e : c.entries) {
    out << e.points << " " << e.euler << " " << e.form.hex() << "\n";
  }
  return out.str();
}

std::string_view match_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::kMember:
      return "MEMBER";
    case MatchKind::kCompressesTo:
      return "COMPRESSES-TO";
    case MatchKind::kUnmatched:
      return "UNMATCHED";
  }
  return "UNMATCHED";
}

CatalogMatch classify_against_catalog(const DigitalSpace& m, const Catalog& c,
                                      const RecognitionOptions& opts) {
  const std::optional<int> dim = recognize_closed_manifold(m, opts);
  if (dim != c.dimension) throw PreconditionError("dimension does not match the catalog");
  auto lookup = [&](const std::string& code) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      if (c.entries[i].form.encoding == code) return i;
    }
    return std::nullopt;
  };
  if (auto hit = lookup(canonical_code(m.graph()))) return {MatchKind::kMember, hit};
  const CompressionResult compressed = compress(m, opts);
  if (auto hit = lookup(canonical_code(compressed.space.graph()))) {
    return {MatchKind::kCompressesTo, hit};
  }
  return {MatchKind::kUnmatched, std::nullopt};
}

}  // namespace digitop
