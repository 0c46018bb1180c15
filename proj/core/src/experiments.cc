#include "kcover/experiments.h"

#include <algorithm>

#include "kcover/automorphisms.h"
#include "kcover/errors.h"
#include "kcover/graph_io.h"
#include "kcover/kronecker.h"

namespace kcover {

bool ReproReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ReproReport::find(std::string_view anchor) const {
  for (const auto& c : checks) {
    if (c.anchor == anchor) return &c;
  }
  return nullptr;
}

nlohmann::json ReproReport::to_json() const {
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& [symbol, g6] : objects) objs.push_back({{"symbol", symbol}, {"graph6", g6}});
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    cs.push_back({{"anchor", c.anchor},
                  {"claim", c.claim},
                  {"passed", c.passed},
                  {"witness", c.witness}});
  }
  return {{"name", name},
          {"objects", std::move(objs)},
          {"checks", std::move(cs)},
          {"parameters", parameters},
          {"observations", observations},
          {"all_passed", all_passed()}};
}

Permutation petersen_involution() {
  return Permutation::from_cycles(10, {{0, 7}, {1, 9}, {2, 4}});
}

Graph build_graph_x() {
  const Graph p = petersen();
  const KroneckerResult kc = kronecker_cover(p);
  return quotient(kc.cover, lift_involution(p, petersen_involution())).graph.with_name("X");
}

std::vector<int> graph_x_hamilton_cycle() { return {9, 0, 2, 3, 8, 5, 7, 4, 1, 6}; }

namespace {

nlohmann::json labeling_note() {
  return {{"vertex_labels", "0-based; 1-based label i is vertex i-1"},
          {"petersen_layout", "outer cycle 0..4, spokes i-(i+5), inner edges (i+5)-((i+2) mod 5 + 5)"},
          {"kronecker_labels", "black v keeps label v, white v' is v+n"}};
}

nlohmann::json iso_witness(const std::optional<Permutation>& p) {
  if (!p) return nullptr;
  return p->image_string();
}

}  // namespace

ReproReport reproduce_figure1() {
  ReproReport r;
  r.name = "figure1";
  const Graph p = petersen();
  const Graph d = desargues();
  const Graph x = build_graph_x();
  const KroneckerResult kc = kronecker_cover(p);
  r.objects = {{"G(5,2)", graph6_encode(p)},
               {"G(10,3)", graph6_encode(d)},
               {"KC(G(5,2))", graph6_encode(kc.cover)},
               {"X", graph6_encode(x)}};
  r.parameters = labeling_note();
  r.parameters["alpha"] = petersen_involution().cycle_string();
  r.parameters["alpha_one_based"] = "(1 8)(2 10)(3 5)";

  {
    auto iso = isomorphism(kc.cover, d);
    r.checks.push_back({"figure1.kc-petersen-is-desargues",
                        "KC(G(5,2)) is isomorphic to G(10,3)", iso.has_value(),
                        {{"isomorphism", iso_witness(iso)}}});
  }

  const QuotientCensus census = kronecker_quotients(d);
  r.checks.push_back({"figure1.two-quotient-classes",
                      "G(10,3) has exactly two conjugacy classes of polarities with "
                      "pairwise non-isomorphic quotients",
                      census.classes.size() == 2 && census.isomorphic_pairs.empty(),
                      census_to_json(d, census)});

  {
    nlohmann::json matches = nlohmann::json::array();
    bool has_p = false, has_x = false;
    for (const auto& c : census.classes) {
      const bool is_p = are_isomorphic(c.quotient.graph, p);
      const bool is_x = are_isomorphic(c.quotient.graph, x);
      has_p |= is_p;
      has_x |= is_x;
      matches.push_back({{"representative", c.representative.cycle_string()},
                         {"isomorphic_to", is_p ? "G(5,2)" : is_x ? "X" : "neither"}});
    }
    r.checks.push_back({"figure1.quotients-petersen-and-x",
                        "the two quotients of G(10,3) are G(5,2) and X",
                        census.classes.size() == 2 && has_p && has_x, matches});
  }

  {
    const int diam = diameter(kc.cover);
    std::vector<int> dist(kc.cover.order());
    bool antipodal = diam == 5;
    for (int v = 0; v < kc.cover.order(); ++v) {
      dist[v] = distances_from(kc.cover, v)[kc.canonical_polarity.perm(v)];
      antipodal &= dist[v] == diam;
    }
    r.checks.push_back({"figure1.canonical-polarity-antipodal",
                        "each pair i, i' is antipodal in KC(G(5,2)) (distance = diameter 5)",
                        antipodal,
                        {{"diameter", diam}, {"pair_distances", dist}}});
  }

  {
    const Permutation alpha = petersen_involution();
    const bool automorphism = is_automorphism(p, alpha);
    const bool involution = alpha.is_involution();
    bool flips = false;
    for (int v = 0; v < p.order(); ++v) flips |= p.has_edge(v, alpha(v));
    bool lifted_ok = false;
    bool quotient_is_x = false;
    nlohmann::json lift = nullptr;
    if (automorphism && involution && !flips) {
      const Polarity pi = lift_involution(p, alpha);
      lifted_ok = is_polarity(kc.cover, pi.perm).ok();
      quotient_is_x = lifted_ok && are_isomorphic(quotient(kc.cover, pi).graph, x);
      lift = pi.perm.cycle_string();
    }
    r.checks.push_back({"figure1.alpha-lifts-to-polarity",
                        "alpha is an edge-preserving involution of G(5,2) flipping no edge; "
                        "its lift is a polarity of KC(G(5,2)) with quotient X",
                        automorphism && involution && !flips && lifted_ok && quotient_is_x,
                        {{"automorphism", automorphism},
                         {"involution", involution},
                         {"flips_edge", flips},
                         {"fixed_points", alpha.fixed_points()},
                         {"lift", lift},
                         {"lift_is_polarity", lifted_ok},
                         {"quotient_isomorphic_to_x", quotient_is_x}}});
  }

  {
    const auto tri = triangles(x);
    r.checks.push_back({"figure1.x-two-triangles",
                        "X has exactly two triangles (1-based 10-1-3 and 8-5-2)",
                        tri.size() == 2 && tri == std::vector<std::vector<int>>{{0, 2, 9}, {1, 4, 7}},
                        {{"triangles", tri}}});
    const auto ham = graph_x_hamilton_cycle();
    r.checks.push_back({"figure1.x-hamilton-cycle",
                        "X has the Hamilton cycle 10,1,3,4,9,6,8,5,2,7 (1-based)",
                        is_hamilton_cycle(x, ham),
                        {{"cycle", ham}}});
    r.checks.push_back({"figure1.x-not-petersen", "X is not isomorphic to G(5,2)",
                        !are_isomorphic(x, p),
                        {{"x_triangles", tri.size()}, {"petersen_triangles", triangles(p).size()}}});
  }
  return r;
}

namespace {

Graph chain(const Graph& a, const Graph& b, const Graph& c, const Attachments& at) {
  const auto& [ua, ub1, ub2, uc] = at.vertices;
  const Graph ab = bridge_join(a, ua, b, ub1);
  return bridge_join(ab, a.order() + ub2, c, uc);
}

CoveringMap chain_cover(const CoveringMap& a, const CoveringMap& b, const CoveringMap& c,
                        const Attachments& at) {
  const auto& [ua, ub1, ub2, uc] = at.vertices;
  const CoveringMap ab = double_cover_extend(a, b, ua, ub1);
  return double_cover_extend(ab, c, a.base.order() + ub2, uc);
}

CoveringMap kc_of(const Graph& g) {
  return voltage_double_cover(VoltageAssignment::constant(g, 1));
}

CoveringMap two_copies_of(const Graph& g) {
  return voltage_double_cover(VoltageAssignment::constant(g, 0));
}

bool valid_attachments(const Attachments& at) {
  return std::all_of(at.vertices.begin(), at.vertices.end(),
                     [](int v) { return v >= 0 && v < 10; });
}

struct TheoremEvaluation {
  std::optional<CoveringMap> over_h2[3];
  bool g0_iso_g1 = true;
  bool covers_h2() const {
    return over_h2[0].has_value() && over_h2[1].has_value() && over_h2[2].has_value();
  }
};

TheoremEvaluation evaluate_core(const TheoremObjects& t) {
  TheoremEvaluation e;
  const CoveringMap* gs[3] = {&t.g0, &t.g1, &t.g2};
  for (int i = 0; i < 3; ++i) {
    e.over_h2[i] = search_covering_map(gs[i]->cover, t.h2);
    if (!e.over_h2[i]) return e;
  }
  e.g0_iso_g1 = are_isomorphic(t.g0.cover, t.g1.cover);
  return e;
}

ReproReport theorem_report(const Attachments& at, const TheoremObjects& t,
                           const TheoremEvaluation& e) {
  ReproReport r;
  r.name = "theorem";
  r.objects = {{"G(5,2)", graph6_encode(petersen())},
               {"X", graph6_encode(build_graph_x())},
               {"G(10,3)", graph6_encode(desargues())},
               {"H1", graph6_encode(t.h1)},
               {"H2", graph6_encode(t.h2)},
               {"G0", graph6_encode(t.g0.cover)},
               {"G1", graph6_encode(t.g1.cover)},
               {"G2", graph6_encode(t.g2.cover)}};
  r.parameters = labeling_note();
  r.parameters["attachments"] = at.vertices;
  r.parameters["attachment_layout"] =
      "component-local [a, b1, b2, c]: bridges a-b1 (components 1-2) and b2-c (components 2-3)";
  r.parameters["bridge_lift"] = "straight: u0-v0, u1-v1 with fibers ordered by cover vertex";
  r.parameters["component_covers"] = {{"G0", {"KC", "KC", "KC"}},
                                      {"G1", {"KC", "KC", "two copies"}},
                                      {"G2", {"two copies", "KC", "KC"}}};

  const bool h1_iso_h2 = are_isomorphic(t.h1, t.h2);
  r.checks.push_back({"theorem.h1-not-h2", "H1 and H2 are not isomorphic", !h1_iso_h2,
                      {{"h1_triangles", triangles(t.h1).size()},
                       {"h2_triangles", triangles(t.h2).size()}}});

  const char* names[3] = {"G0", "G1", "G2"};
  const char* ids[3] = {"g0", "g1", "g2"};
  const CoveringMap* gs[3] = {&t.g0, &t.g1, &t.g2};
  for (int i = 0; i < 3; ++i) {
    const CoveringCheck check = verify_covering(*gs[i]);
    r.checks.push_back({std::string("theorem.") + ids[i] + "-covers-h1",
                        std::string(names[i]) + " is a 2-fold cover of H1", check.valid && gs[i]->fold == 2,
                        {{"vertex_map", gs[i]->vertex_map}, {"diagnostic", check.diagnostic}}});
  }
  for (int i = 0; i < 3; ++i) {
    const auto& m = e.over_h2[i];
    const CoveringCheck check = m ? verify_covering(*m) : CoveringCheck{false, "no covering map found"};
    r.checks.push_back({std::string("theorem.") + ids[i] + "-covers-h2",
                        std::string(names[i]) + " admits a 2-fold covering map onto H2",
                        check.valid && m->fold == 2,
                        {{"vertex_map", m ? nlohmann::json(m->vertex_map) : nlohmann::json(nullptr)},
                         {"diagnostic", check.diagnostic}}});
  }

  const bool g0_iso_g1 = e.covers_h2() ? e.g0_iso_g1 : are_isomorphic(t.g0.cover, t.g1.cover);
  r.checks.push_back({"theorem.g0-not-g1", "G0 and G1 are not isomorphic", !g0_iso_g1,
                      {{"g0_bipartite", bipartition(t.g0.cover).has_value()},
                       {"g1_bipartite", bipartition(t.g1.cover).has_value()},
                       {"g0_triangles", triangles(t.g0.cover).size()},
                       {"g1_triangles", triangles(t.g1.cover).size()}}});

  const bool connected = is_connected(t.g0.cover) && is_connected(t.g1.cover);
  const bool sixty = t.g0.cover.order() == 60 && t.g1.cover.order() == 60;
  r.checks.push_back({"theorem.g0-g1-connected", "G0 and G1 are connected with 60 vertices",
                      connected && sixty,
                      {{"g0_order", t.g0.cover.order()},
                       {"g1_order", t.g1.cover.order()},
                       {"g0_components", connected_components(t.g0.cover).size()},
                       {"g1_components", connected_components(t.g1.cover).size()}}});

  const int n1 = t.h1.order(), n2 = t.h2.order();
  r.checks.push_back(
      {"theorem.minimality",
       "every common cover of H1 and H2 has at least 60 vertices, so G0 and G1 are minimal",
       !h1_iso_h2 && n1 == n2 && n1 == 30 && sixty,
       {{"argument",
         "a common cover with N vertices has fold N/|V(H1)| over H1 and N/|V(H2)| over H2; "
         "|V(H1)| = |V(H2)| = 30 forces equal folds; fold 1 would make H1 and H2 isomorphic, "
         "which they are not; so the fold is at least 2 and N >= 60"},
        {"h1_order", n1},
        {"h2_order", n2},
        {"fold_one_possible", h1_iso_h2}}});

  r.observations["g2_connected"] = is_connected(t.g2.cover);
  r.observations["g2_isomorphic_to_g0"] = are_isomorphic(t.g2.cover, t.g0.cover);
  r.observations["g2_isomorphic_to_g1"] = are_isomorphic(t.g2.cover, t.g1.cover);
  r.observations["g2_triangles"] = triangles(t.g2.cover).size();
  return r;
}

}  // namespace

TheoremObjects build_theorem_objects(const Attachments& at) {
  if (!valid_attachments(at)) {
    throw PreconditionError("attachment vertices must lie in 0..9");
  }
  const Graph p = petersen();
  const Graph x = build_graph_x();
  const CoveringMap kp = kc_of(p), kx = kc_of(x);
  const CoveringMap pp = two_copies_of(p), xx = two_copies_of(x);
  TheoremObjects t;
  t.h1 = chain(p, x, x, at).with_name("H1");
  t.h2 = chain(p, p, x, at).with_name("H2");
  t.g0 = chain_cover(kp, kx, kx, at);
  t.g1 = chain_cover(kp, kx, xx, at);
  t.g2 = chain_cover(pp, kx, kx, at);
  return t;
}

ReproReport reproduce_theorem(std::optional<Attachments> override) {
  if (override) {
    const TheoremObjects t = build_theorem_objects(*override);
    ReproReport r = theorem_report(*override, t, evaluate_core(t));
    r.parameters["attachment_source"] = "override";
    return r;
  }
  const Attachments initial{};
  const TheoremObjects t0 = build_theorem_objects(initial);
  ReproReport first = theorem_report(initial, t0, evaluate_core(t0));
  first.parameters["attachment_source"] = "default";
  if (first.all_passed()) return first;

  int rejected = 1;
  Attachments at;
  for (int a = 0; a < 10; ++a) {
    for (int b1 = 0; b1 < 10; ++b1) {
      for (int b2 = 0; b2 < 10; ++b2) {
        for (int c = 0; c < 10; ++c) {
          at.vertices = {a, b1, b2, c};
          if (at == initial) continue;
          const TheoremObjects t = build_theorem_objects(at);
          const TheoremEvaluation e = evaluate_core(t);
          if (!e.covers_h2() || e.g0_iso_g1) {
            ++rejected;
            continue;
          }
          ReproReport r = theorem_report(at, t, e);
          if (!r.all_passed()) {
            ++rejected;
            continue;
          }
          r.parameters["attachment_source"] = "scan";
          r.parameters["rejected_attachment_count"] = rejected;
          r.observations["default_attachment_failures"] = [&] {
            nlohmann::json fails = nlohmann::json::array();
            for (const auto& ch : first.checks) {
              if (!ch.passed) fails.push_back(ch.anchor);
            }
            return fails;
          }();
          return r;
        }
      }
    }
  }
  first.parameters["scan"] = "exhausted: no attachment tuple passes every check";
  return first;
}

}  // namespace kcover
