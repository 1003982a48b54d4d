#include "digitop/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace digitop {
namespace {

using Cell = std::vector<std::size_t>;
using Cells = std::vector<Cell>;

// Splits cells by neighbour counts into other cells until the ordered
// partition is equitable. Fragments are ordered by count, so the result
// depends only on the graph and the incoming partition, not on labels.
void refine(const Graph& g, Cells& cells) {
  const std::size_t n = g.size();
  std::vector<std::size_t> counts(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      PointSet splitter(n);
      for (std::size_t v : cells[s]) splitter.set(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        Cell& cell = cells[c];
        if (cell.size() < 2) continue;
        bool uniform = true;
        for (std::size_t v : cell) {
          counts[v] = g.neighbors(v).intersection_count(splitter);
          if (counts[v] != counts[cell.front()]) uniform = false;
        }
        if (uniform) continue;
        Cell sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
          return counts[a] < counts[b];
        });
        Cells fragments;
        for (std::size_t v : sorted) {
          if (fragments.empty() || counts[fragments.back().front()] != counts[v]) {
            fragments.emplace_back();
          }
          fragments.back().push_back(v);
        }
        for (Cell& f : fragments) std::sort(f.begin(), f.end());
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(),
                     fragments.end());
        changed = true;
        break;
      }
    }
  }
}

std::string encode(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  std::string code;
  code.reserve(4 + (n * n) / 16 + 1);
  for (int shift = 0; shift < 32; shift += 8) {
    code.push_back(static_cast<char>((n >> shift) & 0xff));
  }
  unsigned char byte = 0;
  int bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const PointSet& row = g.neighbors(order[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (row.test(order[j]) ? 1 : 0));
      if (++bit == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        bit = 0;
      }
    }
  }
  if (bit != 0) code.push_back(static_cast<char>(byte << (8 - bit)));
  return code;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.size()) {}

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells.front().begin(), cells.front().end(), 0);
    }
    descend(std::move(cells), 0);
    CanonicalLabeling out;
    out.order = best_order_;
    out.code = n_ == 0 ? encode(g_, {}) : best_code_;
    out.generators = std::move(generators_);
    return out;
  }

 private:
  // Returns the depth of the node that should resume branching.
  long descend(Cells cells, long depth) {
    refine(g_, cells);
    if (cells.size() == n_) return leaf(cells, depth);

    std::size_t target = 0;
    while (cells[target].size() < 2) ++target;
    const Cell candidates = cells[target];

    std::vector<std::size_t> explored;
    for (std::size_t v : candidates) {
      if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
      Cells child = cells;
      Cell rest;
      for (std::size_t u : candidates) {
        if (u != v) rest.push_back(u);
      }
      child[target] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      path_.push_back(v);
      const long resume = descend(std::move(child), depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
      explored.push_back(v);
    }
    return depth - 1;
  }

  bool equivalent_to_explored(std::size_t v, const std::vector<std::size_t>& explored) {
    UnionFind uf(n_);
    for (const Permutation& gen : generators_) {
      bool fixes_path = true;
      for (std::size_t p : path_) {
        if (gen[p] != p) {
          fixes_path = false;
          break;
        }
      }
      if (!fixes_path) continue;
      for (std::size_t x = 0; x < n_; ++x) uf.unite(x, gen[x]);
    }
    const std::size_t root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](std::size_t e) { return uf.find(e) == root; });
  }

  static long divergence(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t d = 0;
    while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
    return static_cast<long>(d);
  }

  void record_automorphism(const std::vector<std::size_t>& from,
                           const std::vector<std::size_t>& to) {
    Permutation gen(n_);
    for (std::size_t i = 0; i < n_; ++i) gen[from[i]] = to[i];
    generators_.push_back(std::move(gen));
  }

  long leaf(const Cells& cells, long depth) {
    std::vector<std::size_t> order;
    order.reserve(n_);
    for (const Cell& c : cells) order.push_back(c.front());
    std::string code = encode(g_, order);
    if (!have_first_) {
      have_first_ = true;
      first_order_ = best_order_ = order;
      first_code_ = best_code_ = code;
      first_path_ = best_path_ = path_;
      return depth - 1;
    }
    if (code == first_code_) {
      record_automorphism(first_order_, order);
      return divergence(path_, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(best_order_, order);
      return divergence(path_, best_path_);
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_path_ = path_;
    }
    return depth - 1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> path_;
  bool have_first_ = false;
  std::vector<std::size_t> first_order_, best_order_;
  std::string first_code_, best_code_;
  std::vector<std::size_t> first_path_, best_path_;
  std::vector<Permutation> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

std::string canonical_code(const Graph& g) { return canonical_labeling(g).code; }

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalLabeling ca = canonical_labeling(a);
  const CanonicalLabeling cb = canonical_labeling(b);
  if (ca.code != cb.code) return std::nullopt;
  Permutation map(a.size());
  for (std::size_t pos = 0; pos < a.size(); ++pos) map[ca.order[pos]] = cb.order[pos];
  return map;
}

std::vector<std::size_t> orbit_labels(std::size_t n, const std::vector<Permutation>& generators) {
  UnionFind uf(n);
  for (const Permutation& gen : generators) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, gen[x]);
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = uf.find(x);
  return labels;
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(encoding.size() * 2);
  for (char c : encoding) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalForm canonical_form(const DigitalSpace& g) {
  CanonicalLabeling lab = canonical_labeling(g.graph());
  CanonicalForm form;
  form.encoding = std::move(lab.code);
  form.relabeling.reserve(g.size());
  for (std::size_t v : lab.order) form.relabeling.push_back(g.id(v));
  return form;
}

bool are_isomorphic(const DigitalSpace& g, const DigitalSpace& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g.graph()) == canonical_code(h.graph());
}

}  // namespace digitop
