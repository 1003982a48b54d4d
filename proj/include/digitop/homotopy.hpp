#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "digitop/canonical.hpp"
#include "digitop/space.hpp"

namespace digitop {

struct SearchOptions {
  // Recursive decision calls allowed per top-level query.
  std::uint64_t node_limit = 5'000'000;
  // Reject any candidate whose Euler characteristic is not 1.
  bool euler_prune = true;
  bool memoize = true;
};

// Decides whether g reduces to one point by simple-point deletions.
// Throws BudgetExceeded when node_limit is reached.
bool is_contractible(const Graph& g, const SearchOptions& opts = {});
bool is_contractible(const DigitalSpace& g, const SearchOptions& opts = {});

bool is_simple_point(const Graph& g, std::size_t v, const SearchOptions& opts = {});
bool is_simple_point(const DigitalSpace& g, std::string_view v, const SearchOptions& opts = {});

// (v, u) must be an edge; throws PreconditionError otherwise.
bool is_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                    const SearchOptions& opts = {});

enum class StepKind { kDeletePoint, kAttachPoint, kDeleteEdge, kAttachEdge };

std::string_view step_kind_name(StepKind kind);

// One contractible transformation. `rim` is the subject point's rim for
// point steps (needed to undo a deletion); `other` is set for edge steps.
struct TransformStep {
  StepKind kind = StepKind::kDeletePoint;
  PointId subject;
  PointId other;
  std::vector<PointId> rim;

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

struct TransformTrace {
  CanonicalForm start;
  std::vector<TransformStep> steps;
  CanonicalForm end;
};

// Each call checks that the subject is simple and throws PreconditionError
// otherwise. When `step` is non-null the applied step is written there.
DigitalSpace delete_simple_point(const DigitalSpace& g, std::string_view v,
                                 TransformStep* step = nullptr, const SearchOptions& opts = {});
DigitalSpace attach_simple_point(const DigitalSpace& g, const PointId& fresh,
                                 const std::vector<PointId>& rim_spec,
                                 TransformStep* step = nullptr, const SearchOptions& opts = {});
DigitalSpace delete_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                                TransformStep* step = nullptr, const SearchOptions& opts = {});
DigitalSpace attach_simple_edge(const DigitalSpace& g, std::string_view v, std::string_view u,
                                TransformStep* step = nullptr, const SearchOptions& opts = {});

DigitalSpace apply_step(const DigitalSpace& g, const TransformStep& step,
                        const SearchOptions& opts = {});
TransformStep inverse_step(const TransformStep& step);
DigitalSpace replay(const DigitalSpace& start, const std::vector<TransformStep>& steps,
                    const SearchOptions& opts = {});

// Simple-point deletions from g down to one point. Throws PreconditionError
// when g is not contractible.
TransformTrace contractible_witness(const DigitalSpace& g, const SearchOptions& opts = {});

enum class ReductionStrategy {
  // Greedy simple-point sweeps alternating with simple-edge deletion sweeps.
  kDeleteOnly,
  // Attach every simple non-edge, then delete simple points; repeat.
  kGlueThenDelete,
};

struct ReductionOptions {
  ReductionStrategy strategy = ReductionStrategy::kDeleteOnly;
  std::size_t max_steps = 1'000'000;
  std::size_t edge_attach_budget = 10'000;
  SearchOptions search;
};

struct Reduction {
  DigitalSpace space;
  TransformTrace trace;
  bool budget_hit = false;
};

Reduction reduce(const DigitalSpace& g, const ReductionOptions& opts = {});

enum class HomotopyVerdict { kDistinct, kNotDistinguished };

std::string_view verdict_name(HomotopyVerdict verdict);

// Distinct Euler characteristics prove the spaces are not homotopy
// equivalent; anything else is reported as not distinguished.
HomotopyVerdict homotopy_distinguish(const DigitalSpace& g, const DigitalSpace& h);

}  // namespace digitop
