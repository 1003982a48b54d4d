#include "digitop/homotopy.hpp"

#include <cassert>
#include <string>

#include "digitop/errors.hpp"
#include "digitop/memo.hpp"

namespace digitop {
namespace {

// Below this size the canonical code costs more than the decision.
constexpr std::size_t kMemoMinPoints = 5;

class ContractibilitySearch {
 public:
  explicit ContractibilitySearch(const SearchOptions& opts) : opts_(opts) {}

  bool decide(const Graph& g) {
    if (++nodes_ > opts_.node_limit) {
      throw BudgetExceeded("contractibility search exceeded " + std::to_string(opts_.node_limit) +
                           " nodes");
    }
    const std::size_t n = g.size();
    if (n == 0) return false;
    if (n == 1) return true;
    if (!g.connected()) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) return true;  // cone over the rest
    }
    if (opts_.euler_prune && euler_characteristic(g) != 1) return false;

    std::string key;
    const bool memo = opts_.memoize && n >= kMemoMinPoints;
    if (memo) {
      key = canonical_code(g);
      if (auto hit = contractibility_cache().get(key)) return *hit;
    }

    std::vector<std::size_t> simple;
    for (std::size_t v = 0; v < n; ++v) {
      if (decide(g.induced(g.neighbors(v)))) simple.push_back(v);
    }
    bool result = false;
    // A contractible graph with more than one point has two simple points.
    if (simple.size() >= 2) {
      for (std::size_t v : simple) {
        if (decide(g.without(v))) {
          result = true;
          break;
        }
      }
    }
    if (memo) contractibility_cache().put(key, result);
    return result;
  }

 private:
  const SearchOptions& opts_;
  std::uint64_t nodes_ = 0;
};

PointSet common_neighbors(const Graph& g, std::size_t i, std::size_t j) {
  return g.neighbors(i) & g.neighbors(j);
}

[[maybe_unused]] void check_euler_preserved(const DigitalSpace& before,
                                            const DigitalSpace& after) {
#ifndef NDEBUG
  assert(euler_characteristic(before) == euler_characteristic(after));
#else
  (void)before;
  (void)after;
#endif
}

DigitalSpace without_point(const DigitalSpace& g, std::size_t i) {
  PointSet keep = g.graph().all();
  keep.reset(i);
  return DigitalSpace::from_graph(g.graph().induced(keep), g.ids_of(keep));
}

DigitalSpace with_edge_toggled(const DigitalSpace& g, std::size_t i, std::size_t j, bool present) {
  Graph h = g.graph();
  if (present) {
    h.add_edge(i, j);
  } else {
    h.remove_edge(i, j);
  }
  return DigitalSpace::from_graph(h, g.points());
}

}  // namespace

bool is_contractible(const Graph& g, const SearchOptions& opts) {
  return ContractibilitySearch(opts).decide(g);
}

bool is_contractible(const DigitalSpace& g, const SearchOptions& opts) {
  return is_contractible(g.graph(), opts);
}

bool is_simple_point(const Graph& g, std::size_t v, const SearchOptions& opts) {
  return is_contractible(g.induced(g.neighbors(v)), opts);
}

bool is_simple_point(const DigitalSpace& g, std::string_view v, const SearchOptions& opts) {
  return is_simple_point(g.graph(), g.index_of(v), opts);
}

bool is_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                    const SearchOptions& opts) {
  const std::size_t i = g.index_of(v);
  const std::size_t j = g.index_of(u);
  if (i == j || !g.graph().adjacent(i, j)) {
    throw PreconditionError("(" + std::string(v) + "," + std::string(u) + ") is not an edge");
  }
  return is_contractible(g.graph().induced(common_neighbors(g.graph(), i, j)), opts);
}

std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kDeletePoint:
      return "delete-point";
    case StepKind::kAttachPoint:
      return "attach-point";
    case StepKind::kDeleteEdge:
      return "delete-edge";
    case StepKind::kAttachEdge:
      return "attach-edge";
  }
  return "unknown";
}

DigitalSpace delete_simple_point(const DigitalSpace& g, std::string_view v, TransformStep* step,
                                 const SearchOptions& opts) {
  const std::size_t i = g.index_of(v);
  if (!is_simple_point(g.graph(), i, opts)) {
    throw PreconditionError("point '" + std::string(v) + "' is not simple");
  }
  DigitalSpace out = without_point(g, i);
  check_euler_preserved(g, out);
  if (step != nullptr) {
    *step = TransformStep{StepKind::kDeletePoint, std::string(v), {},
                          g.ids_of(g.graph().neighbors(i))};
  }
  return out;
}

DigitalSpace attach_simple_point(const DigitalSpace& g, const PointId& fresh,
                                 const std::vector<PointId>& rim_spec, TransformStep* step,
                                 const SearchOptions& opts) {
  if (g.contains(fresh)) throw PreconditionError("point '" + fresh + "' already exists");
  if (!is_valid_point_id(fresh)) throw PreconditionError("invalid point id '" + fresh + "'");
  const PointSet rim_set = g.indices_of(rim_spec);
  if (!is_contractible(g.graph().induced(rim_set), opts)) {
    throw PreconditionError("attachment rim of '" + fresh + "' is not contractible");
  }
  Graph h = g.graph();
  const std::size_t x = h.add_point();
  rim_set.for_each([&](std::size_t r) { h.add_edge(x, r); });
  std::vector<PointId> names = g.points();
  names.push_back(fresh);
  DigitalSpace out = DigitalSpace::from_graph(h, std::move(names));
  check_euler_preserved(g, out);
  if (step != nullptr) {
    *step = TransformStep{StepKind::kAttachPoint, fresh, {}, g.ids_of(rim_set)};
  }
  return out;
}

DigitalSpace delete_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                                TransformStep* step, const SearchOptions& opts) {
  if (!is_simple_edge(g, v, u, opts)) {
    throw PreconditionError("edge (" + std::string(v) + "," + std::string(u) + ") is not simple");
  }
  DigitalSpace out = with_edge_toggled(g, g.index_of(v), g.index_of(u), false);
  check_euler_preserved(g, out);
  if (step != nullptr) *step = TransformStep{StepKind::kDeleteEdge, std::string(v), std::string(u), {}};
  return out;
}

DigitalSpace attach_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                                TransformStep* step, const SearchOptions& opts) {
  const std::size_t i = g.index_of(v);
  const std::size_t j = g.index_of(u);
  if (i == j) throw PreconditionError("cannot attach a self-loop");
  if (g.graph().adjacent(i, j)) {
    throw PreconditionError("(" + std::string(v) + "," + std::string(u) + ") is already an edge");
  }
  if (!is_contractible(g.graph().induced(common_neighbors(g.graph(), i, j)), opts)) {
    throw PreconditionError("edge (" + std::string(v) + "," + std::string(u) +
                            ") would not be simple");
  }
  DigitalSpace out = with_edge_toggled(g, i, j, true);
  check_euler_preserved(g, out);
  if (step != nullptr) *step = TransformStep{StepKind::kAttachEdge, std::string(v), std::string(u), {}};
  return out;
}

DigitalSpace apply_step(const DigitalSpace& g, const TransformStep& step,
                        const SearchOptions& opts) {
  switch (step.kind) {
    case StepKind::kDeletePoint:
      return delete_simple_point(g, step.subject, nullptr, opts);
    case StepKind::kAttachPoint:
      return attach_simple_point(g, step.subject, step.rim, nullptr, opts);
    case StepKind::kDeleteEdge:
      return delete_simple_edge(g, step.subject, step.other, nullptr, opts);
    case StepKind::kAttachEdge:
      return attach_simple_edge(g, step.subject, step.other, nullptr, opts);
  }
  throw PreconditionError("unknown step kind");
}

TransformStep inverse_step(const TransformStep& step) {
  TransformStep inv = step;
  switch (step.kind) {
    case StepKind::kDeletePoint:
      inv.kind = StepKind::kAttachPoint;
      break;
    case StepKind::kAttachPoint:
      inv.kind = StepKind::kDeletePoint;
      break;
    case StepKind::kDeleteEdge:
      inv.kind = StepKind::kAttachEdge;
      break;
    case StepKind::kAttachEdge:
      inv.kind = StepKind::kDeleteEdge;
      break;
  }
  return inv;
}

DigitalSpace replay(const DigitalSpace& start, const std::vector<TransformStep>& steps,
                    const SearchOptions& opts) {
  DigitalSpace cur = start;
  for (const TransformStep& s : steps) cur = apply_step(cur, s, opts);
  return cur;
}

TransformTrace contractible_witness(const DigitalSpace& g, const SearchOptions& opts) {
  if (!is_contractible(g, opts)) throw PreconditionError("space is not contractible");
  TransformTrace trace;
  trace.start = canonical_form(g);
  DigitalSpace cur = g;
  while (cur.size() > 1) {
    bool advanced = false;
    for (std::size_t i = 0; i < cur.size() && !advanced; ++i) {
      const Graph& h = cur.graph();
      if (!is_simple_point(h, i, opts) || !is_contractible(h.without(i), opts)) continue;
      TransformStep step;
      cur = delete_simple_point(cur, cur.id(i), &step, opts);
      trace.steps.push_back(std::move(step));
      advanced = true;
    }
    // Unreachable for a contractible input.
    if (!advanced) throw Error("contractible witness search got stuck");
  }
  trace.end = canonical_form(cur);
  return trace;
}

namespace {

class Reducer {
 public:
  Reducer(const DigitalSpace& g, const ReductionOptions& opts) : cur_(g), opts_(opts) {}

  Reduction run() {
    Reduction out;
    out.trace.start = canonical_form(cur_);
    try {
      if (opts_.strategy == ReductionStrategy::kDeleteOnly) {
        while (true) {
          const bool points = point_sweep();
          const bool edges = edge_sweep();
          if (!points && !edges) break;
        }
      } else {
        while (true) {
          glue_simple_edges();
          if (!point_sweep()) break;
        }
      }
    } catch (const BudgetExceeded&) {
      out.budget_hit = true;
    }
    out.space = cur_;
    out.trace.steps = std::move(steps_);
    out.trace.end = canonical_form(cur_);
    return out;
  }

 private:
  void charge() {
    if (steps_.size() >= opts_.max_steps) throw BudgetExceeded("reduction step budget reached");
  }

  bool point_sweep() {
    bool progress = false;
    const std::vector<PointId> ids = cur_.points();
    for (const PointId& id : ids) {
      if (cur_.size() <= 1) break;
      const std::size_t i = cur_.index_of(id);
      if (!is_simple_point(cur_.graph(), i, opts_.search)) continue;
      charge();
      TransformStep step;
      cur_ = delete_simple_point(cur_, id, &step, opts_.search);
      steps_.push_back(std::move(step));
      progress = true;
    }
    return progress;
  }

  bool edge_sweep() {
    bool progress = false;
    for (const auto& [a, b] : cur_.edges()) {
      if (!cur_.adjacent(a, b) || !is_simple_edge(cur_, a, b, opts_.search)) continue;
      charge();
      TransformStep step;
      cur_ = delete_simple_edge(cur_, a, b, &step, opts_.search);
      steps_.push_back(std::move(step));
      progress = true;
    }
    return progress;
  }

  void glue_simple_edges() {
    bool glued = true;
    while (glued) {
      glued = false;
      const std::size_t n = cur_.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Graph& h = cur_.graph();
          if (h.adjacent(i, j)) continue;
          if (!is_contractible(h.induced(common_neighbors(h, i, j)), opts_.search)) continue;
          if (attached_ >= opts_.edge_attach_budget) {
            throw BudgetExceeded("edge attachment budget reached");
          }
          charge();
          TransformStep step;
          cur_ = attach_simple_edge(cur_, cur_.id(i), cur_.id(j), &step, opts_.search);
          steps_.push_back(std::move(step));
          ++attached_;
          glued = true;
        }
      }
    }
  }

  DigitalSpace cur_;
  const ReductionOptions& opts_;
  std::vector<TransformStep> steps_;
  std::size_t attached_ = 0;
};

}  // namespace

Reduction reduce(const DigitalSpace& g, const ReductionOptions& opts) {
  return Reducer(g, opts).run();
}

std::string_view verdict_name(HomotopyVerdict verdict) {
  return verdict == HomotopyVerdict::kDistinct ? "DISTINCT" : "NOT-DISTINGUISHED";
}

HomotopyVerdict homotopy_distinguish(const DigitalSpace& g, const DigitalSpace& h) {
  return euler_characteristic(g) != euler_characteristic(h) ? HomotopyVerdict::kDistinct
                                                            : HomotopyVerdict::kNotDistinguished;
}

}  // namespace digitop
