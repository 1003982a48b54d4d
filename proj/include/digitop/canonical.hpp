#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digitop/graph.hpp"
#include "digitop/space.hpp"

namespace digitop {

using Permutation = std::vector<std::size_t>;

struct CanonicalLabeling {
  // order[pos] is the point placed at canonical position pos.
  std::vector<std::size_t> order;
  // Point count followed by the packed upper adjacency triangle in
  // canonical order. Equal codes <=> isomorphic graphs.
  std::string code;
  // Automorphisms discovered during the search (perm[v] = image of v).
  std::vector<Permutation> generators;
};

// Individualization-refinement search: equitable refinement, branching on
// the first non-singleton cell, pruning by discovered automorphisms.
CanonicalLabeling canonical_labeling(const Graph& g);

std::string canonical_code(const Graph& g);

// A point map a -> b that is an isomorphism, if one exists.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);

// Orbit label (smallest member) of every point under the group generated by
// `generators`.
std::vector<std::size_t> orbit_labels(std::size_t n, const std::vector<Permutation>& generators);

// Relabeling-invariant encoding of a DigitalSpace.
struct CanonicalForm {
  std::string encoding;
  std::vector<PointId> relabeling;  // canonical index -> point id

  std::string hex() const;
};

CanonicalForm canonical_form(const DigitalSpace& g);
bool are_isomorphic(const DigitalSpace& g, const DigitalSpace& h);

}  // namespace digitop
