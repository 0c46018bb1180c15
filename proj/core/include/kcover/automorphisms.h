#ifndef KCOVER_AUTOMORPHISMS_H_
#define KCOVER_AUTOMORPHISMS_H_

#include <cstddef>
#include <optional>

#include "kcover/graph.h"
#include "kcover/permutation.h"

namespace kcover {

struct SearchLimits {
  int max_vertices = 64;
  std::size_t max_group_order = 1'000'000;
};

// Throws PreconditionError when p.size() != g.order().
bool is_automorphism(const Graph& g, const Permutation& p);

// True if `map` (vertex of g -> vertex of h) carries E(g) exactly onto E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& map);

// The full automorphism group as a sorted element list.
//
// Backtracking over individualized vertices: at each node both sides of the
// search (the fixed reference labeling and the candidate image) are refined
// to an equitable partition in lockstep, splitting every cell by the sorted
// multiset of neighbor cells. A branch is cut as soon as the two sides split
// differently. The reference side always individualizes the least vertex of
// the first smallest non-singleton cell; the image side tries every vertex of
// the matching cell, so each automorphism is reached by exactly one leaf.
//
// Throws LimitExceeded when g has more than limits.max_vertices vertices or
// the group grows beyond limits.max_group_order elements.
PermutationSet automorphisms(const Graph& g, const SearchLimits& limits = {});

// First isomorphism g -> h in the same deterministic search order, or
// nullopt. Not a canonical choice.
std::optional<Permutation> isomorphism(const Graph& g, const Graph& h);

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return isomorphism(g, h).has_value();
}

}  // namespace kcover

#endif  // KCOVER_AUTOMORPHISMS_H_
