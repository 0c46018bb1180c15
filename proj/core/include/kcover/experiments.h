#ifndef KCOVER_EXPERIMENTS_H_
#define KCOVER_EXPERIMENTS_H_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcover/covering.h"
#include "kcover/graph.h"
#include "kcover/permutation.h"

namespace kcover {

struct Check {
  std::string anchor;  // stable claim identifier, e.g. "theorem.g0-not-g1"
  std::string claim;
  bool passed = false;
  nlohmann::json witness;
};

struct ReproReport {
  std::string name;
  // Symbol -> graph6, in insertion order.
  std::vector<std::pair<std::string, std::string>> objects;
  std::vector<Check> checks;
  nlohmann::json parameters = nlohmann::json::object();
  // Outcomes that are computed and reported but not pass/fail claims.
  nlohmann::json observations = nlohmann::json::object();

  bool all_passed() const;
  const Check* find(std::string_view anchor) const;
  nlohmann::json to_json() const;
};

// Vertex labels are 0-based throughout: label i in the 1-based drawing
// convention (outer pentagon 1..5, inner pentagram 6..10, i adjacent to i+5)
// is vertex i-1 here, which matches generalized_petersen(5, 2).

// The involution (1,8)(2,10)(3,5) of the Petersen graph in 1-based labels,
// i.e. (0 7)(1 9)(2 4) here. Fixes 3, 5, 6, 8.
Permutation petersen_involution();

// X = quotient of KC(Petersen) by the lift of petersen_involution(). A cubic
// graph on 10 vertices with two triangles, not isomorphic to Petersen.
Graph build_graph_x();

// Hamilton cycle of X in 0-based labels: 9 0 2 3 8 5 7 4 1 6.
std::vector<int> graph_x_hamilton_cycle();

ReproReport reproduce_figure1();

// Bridge attachment vertices for the three-component chains A ⌣ B ⌣ C,
// component-local: {a, b1, b2, c} joins a in A to b1 in B and b2 in B to c
// in C.
struct Attachments {
  std::array<int, 4> vertices{0, 0, 0, 0};
  friend bool operator==(const Attachments&, const Attachments&) = default;
};

struct TheoremObjects {
  Graph h1;        // P ⌣ X ⌣ X
  Graph h2;        // P ⌣ P ⌣ X
  CoveringMap g0;  // KC(P) ≍ KC(X) ≍ KC(X) over h1
  CoveringMap g1;  // KC(P) ≍ KC(X) ≍ 2X over h1
  CoveringMap g2;  // 2P ≍ KC(X) ≍ KC(X) over h1
};

TheoremObjects build_theorem_objects(const Attachments& at);

// With an override, reports on exactly that configuration. Without one,
// starts at all-zero attachments and, if some check fails, scans all
// attachment tuples in lexicographic order and reports the first one where
// every check passes (or the failing default if none does).
ReproReport reproduce_theorem(std::optional<Attachments> override = std::nullopt);

}  // namespace kcover

#endif  // KCOVER_EXPERIMENTS_H_
