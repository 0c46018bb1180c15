#include "kcover/kronecker.h"

#include <algorithm>
#include <string>

#include "kcover/errors.h"
#include "kcover/graph_io.h"

namespace kcover {

std::string_view to_string(PolarityFailure f) {
  switch (f) {
    case PolarityFailure::kNotAutomorphism: return "not-automorphism";
    case PolarityFailure::kHasFixedPoint: return "has-fixed-point";
    case PolarityFailure::kFixesBipartition: return "fixes-bipartition";
    case PolarityFailure::kAdjacentImage: return "adjacent-image";
    case PolarityFailure::kNotInvolution: return "not-involution";
  }
  return "unknown";
}

namespace {

Bipartition black_white(int n) {
  Bipartition b;
  b.side.assign(2 * n, 0);
  for (int v = n; v < 2 * n; ++v) b.side[v] = 1;
  b.v1_count = b.v2_count = n;
  return b;
}

Bipartition require_connected_bipartition(const Graph& k, const char* op) {
  if (!is_connected(k)) {
    throw PreconditionError(std::string(op) + ": not supported: disconnected graph");
  }
  auto sides = bipartition(k);
  if (!sides) {
    throw PreconditionError(std::string(op) +
                            ": graph is not bipartite; a connected graph is a "
                            "Kronecker cover iff it is bipartite and has a polarity");
  }
  return *sides;
}

}  // namespace

KroneckerResult kronecker_cover(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  Graph cover = Graph::from_edge_list(
      2 * n, edges, g.name().empty() ? std::string() : "KC(" + g.name() + ")");

  std::vector<int> swap(2 * n), proj(2 * n);
  for (int v = 0; v < n; ++v) {
    swap[v] = v + n;
    swap[v + n] = v;
    proj[v] = proj[v + n] = v;
  }
  CoveringMap projection{g, cover, std::move(proj), 2};
  return KroneckerResult{std::move(cover), std::move(projection),
                         Polarity{Permutation::from_image(std::move(swap)), black_white(n)}};
}

PolarityCheck check_polarity(const Graph& k, const Permutation& p,
                             const Bipartition& sides) {
  if (p.size() != k.order() || static_cast<int>(sides.side.size()) != k.order()) {
    throw PreconditionError("check_polarity: size mismatch");
  }
  if (!is_automorphism(k, p)) return {PolarityFailure::kNotAutomorphism, -1};
  for (int v = 0; v < k.order(); ++v) {
    if (p(v) == v) return {PolarityFailure::kHasFixedPoint, v};
  }
  for (int v = 0; v < k.order(); ++v) {
    if (sides.side[p(v)] == sides.side[v]) return {PolarityFailure::kFixesBipartition, v};
  }
  for (int v = 0; v < k.order(); ++v) {
    if (k.has_edge(v, p(v))) return {PolarityFailure::kAdjacentImage, v};
  }
  for (int v = 0; v < k.order(); ++v) {
    if (p(p(v)) != v) return {PolarityFailure::kNotInvolution, v};
  }
  return {};
}

PolarityCheck is_polarity(const Graph& k, const Permutation& p) {
  const Bipartition sides = require_connected_bipartition(k, "is_polarity");
  if (p.size() != k.order()) {
    throw PreconditionError("is_polarity: permutation degree does not match graph order");
  }
  return check_polarity(k, p, sides);
}

PermutationSet find_polarities(const Graph& k, const SearchLimits& limits) {
  const Bipartition sides = require_connected_bipartition(k, "find_polarities");
  std::vector<Permutation> out;
  for (const auto& a : automorphisms(k, limits)) {
    if (check_polarity(k, a, sides)) out.push_back(a);
  }
  return PermutationSet(std::move(out));
}

std::optional<Polarity> is_kronecker_cover(const Graph& k, const SearchLimits& limits) {
  if (!is_connected(k)) {
    throw PreconditionError("is_kronecker_cover: graph is not connected");
  }
  auto sides = bipartition(k);
  if (!sides) return std::nullopt;
  PermutationSet pols = find_polarities(k, limits);
  if (pols.empty()) return std::nullopt;
  return Polarity{pols[0], *sides};
}

Quotient quotient(const Graph& k, const Polarity& p) {
  if (p.perm.size() != k.order()) {
    throw PreconditionError("quotient: permutation degree does not match graph order");
  }
  if (auto check = check_polarity(k, p.perm, p.bipartition); !check) {
    throw PreconditionError(std::string("quotient: not a polarity (") +
                            std::string(to_string(*check.failure)) + ")");
  }
  std::vector<int> label(k.order(), -1);
  int next = 0;
  for (int v = 0; v < k.order(); ++v) {
    if (label[v] >= 0) continue;
    label[v] = label[p.perm(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : k.edges()) edges.emplace_back(label[u], label[v]);
  Graph base = Graph::from_edge_list(next, edges);
  return Quotient{base, CoveringMap{base, k, std::move(label), 2}};
}

QuotientCensus kronecker_quotients(const Graph& k, const SearchLimits& limits) {
  const Bipartition sides = require_connected_bipartition(k, "kronecker_quotients");
  const PermutationSet group = automorphisms(k, limits);
  std::vector<Permutation> pols;
  for (const auto& a : group) {
    if (check_polarity(k, a, sides)) pols.push_back(a);
  }
  const PermutationSet polarities(std::move(pols));

  QuotientCensus census;
  census.polarity_count = polarities.size();
  for (const auto& cls : conjugacy_classes(polarities, group)) {
    census.classes.push_back(
        QuotientClass{cls[0], cls.size(), quotient(k, Polarity{cls[0], sides})});
  }
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
      if (are_isomorphic(census.classes[i].quotient.graph,
                         census.classes[j].quotient.graph)) {
        census.isomorphic_pairs.emplace_back(i, j);
      }
    }
  }
  return census;
}

nlohmann::json census_to_json(const Graph& k, const QuotientCensus& census) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : census.classes) {
    classes.push_back({{"representative", c.representative.image_string()},
                       {"representative_cycles", c.representative.cycle_string()},
                       {"class_size", c.class_size},
                       {"quotient_graph6", graph6_encode(c.quotient.graph)},
                       {"quotient_order", c.quotient.graph.order()}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : census.isomorphic_pairs) pairs.push_back({i, j});
  return {{"input_graph6", graph6_encode(k)},
          {"polarity_count", census.polarity_count},
          {"class_count", census.classes.size()},
          {"classes", std::move(classes)},
          {"isomorphic_class_pairs", std::move(pairs)}};
}

Polarity lift_involution(const Graph& g, const Permutation& a) {
  const int n = g.order();
  if (a.size() != n) {
    throw PreconditionError("lift_involution: permutation degree does not match graph order");
  }
  if (!a.is_involution()) throw PreconditionError("lift_involution: not an involution");
  if (!is_automorphism(g, a)) throw PreconditionError("lift_involution: not an automorphism");
  for (int v = 0; v < n; ++v) {
    if (g.has_edge(v, a(v))) {
      throw PreconditionError("lift_involution: flips edge {" + std::to_string(std::min(v, a(v))) +
                              "," + std::to_string(std::max(v, a(v))) + "}");
    }
  }
  std::vector<int> image(2 * n);
  for (int i = 0; i < n; ++i) {
    image[i] = a(i) + n;
    image[i + n] = a(i);
  }
  return Polarity{Permutation::from_image(std::move(image)), black_white(n)};
}

}  // namespace kcover
