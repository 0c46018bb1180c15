#ifndef KCOVER_KRONECKER_H_
#define KCOVER_KRONECKER_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcover/automorphisms.h"
#include "kcover/covering.h"
#include "kcover/graph.h"
#include "kcover/permutation.h"

namespace kcover {

// Fixed-point-free involutive automorphism of a bipartite graph that swaps
// the two sides and maps no vertex to a neighbor.
struct Polarity {
  Permutation perm;
  Bipartition bipartition;
};

enum class PolarityFailure {
  kNotAutomorphism,
  kHasFixedPoint,
  kFixesBipartition,
  kAdjacentImage,
  kNotInvolution,
};

std::string_view to_string(PolarityFailure f);

struct PolarityCheck {
  std::optional<PolarityFailure> failure;
  int vertex = -1;  // offending vertex, when one applies

  bool ok() const { return !failure.has_value(); }
  explicit operator bool() const { return ok(); }
};

// Kronecker cover (bipartite double cover) of g. Black vertex v keeps label
// v, its white twin v' is v+n; each edge {u,v} lifts to {u,v'} and {v,u'}.
struct KroneckerResult {
  Graph cover;
  CoveringMap projection;        // v, v+n -> v
  Polarity canonical_polarity;   // v <-> v+n
};

KroneckerResult kronecker_cover(const Graph& g);

// Checks the polarity conditions against a given 2-coloring. Works for
// disconnected graphs too. Conditions are tested in the order of
// PolarityFailure; the first violation is reported.
PolarityCheck check_polarity(const Graph& k, const Permutation& p,
                             const Bipartition& sides);

// As check_polarity, using the bipartition of k. Throws PreconditionError if
// k is not bipartite or not connected, or if p has the wrong degree.
PolarityCheck is_polarity(const Graph& k, const Permutation& p);

// All polarities of a connected bipartite graph, drawn from automorphisms(k).
PermutationSet find_polarities(const Graph& k, const SearchLimits& limits = {});

// Least polarity if k is a Kronecker cover, nullopt otherwise (including
// non-bipartite k). Throws PreconditionError if k is disconnected.
std::optional<Polarity> is_kronecker_cover(const Graph& k,
                                           const SearchLimits& limits = {});

struct Quotient {
  Graph graph;
  CoveringMap projection;
};

// Identifies each vertex with its image. Orbits {v, p(v)} are numbered in
// increasing order of their least member. Throws PreconditionError when p
// fails check_polarity against p.bipartition.
Quotient quotient(const Graph& k, const Polarity& p);

struct QuotientClass {
  Permutation representative;  // least member of the conjugacy class
  std::size_t class_size = 0;
  Quotient quotient;
};

struct QuotientCensus {
  std::size_t polarity_count = 0;
  std::vector<QuotientClass> classes;
  // Pairs of class indices whose quotients turned out isomorphic. Expected
  // empty; reported rather than assumed.
  std::vector<std::pair<std::size_t, std::size_t>> isomorphic_pairs;
};

// One quotient per conjugacy class of polarities under Aut(k), ordered by
// representative. Throws PreconditionError unless k is connected and
// bipartite.
QuotientCensus kronecker_quotients(const Graph& k, const SearchLimits& limits = {});

// {input_graph6, polarity_count, class_count, classes: [{representative,
// representative_cycles, class_size, quotient_graph6, quotient_order}],
// isomorphic_class_pairs}
nlohmann::json census_to_json(const Graph& k, const QuotientCensus& census);

// Lifts an involutive automorphism a of g (fixed points allowed, no edge
// {v, a(v)}) to the polarity i -> a(i)+n, i+n -> a(i) of kronecker_cover(g).
// Throws PreconditionError when a violates those conditions.
Polarity lift_involution(const Graph& g, const Permutation& a);

}  // namespace kcover

#endif  // KCOVER_KRONECKER_H_
