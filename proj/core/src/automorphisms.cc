#include "kcover/automorphisms.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "kcover/errors.h"

namespace kcover {

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw PreconditionError("is_automorphism: permutation degree " +
                            std::to_string(p.size()) + " does not match order " +
                            std::to_string(g.order()));
  }
  return is_isomorphism(g, g, p);
}

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& map) {
  if (g.order() != h.order() || g.size() != h.size() || map.size() != g.order()) {
    return false;
  }
  // Injective on vertices and |E(g)| = |E(h)|, so edge preservation suffices.
  for (const auto& [u, v] : g.edges()) {
    if (!h.has_edge(map(u), map(v))) return false;
  }
  return true;
}

namespace {

// Ordered partition of the vertex set. Vertices within a cell are ascending.
struct Partition {
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;

  explicit Partition(int n) : cell_of(n, 0) {
    if (n > 0) {
      cells.emplace_back(n);
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
  }

  bool discrete() const { return cells.size() == cell_of.size(); }

  // Moves v into its own cell placed directly before the rest of its cell.
  void individualize(int v) {
    const int c = cell_of[v];
    std::vector<int> rest;
    rest.reserve(cells[c].size() - 1);
    for (int w : cells[c]) {
      if (w != v) rest.push_back(w);
    }
    cells[c] = {v};
    cells.insert(cells.begin() + c + 1, std::move(rest));
    reindex();
  }

  void reindex() {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
  }
};

// Neighbor-cell multiset of each vertex of one cell, sorted by (signature,
// vertex).
struct CellSignatures {
  std::vector<std::pair<std::vector<int>, int>> entries;
};

CellSignatures signatures(const Graph& g, const Partition& p, int cell) {
  CellSignatures out;
  out.entries.reserve(p.cells[cell].size());
  for (int v : p.cells[cell]) {
    std::vector<int> sig;
    sig.reserve(g.degree(v));
    for (int w : g.neighbors(v)) sig.push_back(p.cell_of[w]);
    std::sort(sig.begin(), sig.end());
    out.entries.emplace_back(std::move(sig), v);
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

// Refines both partitions to equitable ones using the same splitting rule.
// Returns false as soon as the two sides disagree.
bool refine_pair(const Graph& g, Partition& pg, const Graph& h, Partition& ph) {
  while (true) {
    std::vector<std::vector<int>> next_g, next_h;
    next_g.reserve(pg.cells.size());
    next_h.reserve(ph.cells.size());
    for (std::size_t c = 0; c < pg.cells.size(); ++c) {
      CellSignatures sg = signatures(g, pg, static_cast<int>(c));
      CellSignatures sh = signatures(h, ph, static_cast<int>(c));
      for (std::size_t i = 0; i < sg.entries.size(); ++i) {
        if (sg.entries[i].first != sh.entries[i].first) return false;
      }
      for (std::size_t i = 0; i < sg.entries.size(); ++i) {
        if (i == 0 || sg.entries[i].first != sg.entries[i - 1].first) {
          next_g.emplace_back();
          next_h.emplace_back();
        }
        next_g.back().push_back(sg.entries[i].second);
        next_h.back().push_back(sh.entries[i].second);
      }
    }
    const bool stable = next_g.size() == pg.cells.size();
    for (auto& cell : next_g) std::sort(cell.begin(), cell.end());
    for (auto& cell : next_h) std::sort(cell.begin(), cell.end());
    pg.cells = std::move(next_g);
    ph.cells = std::move(next_h);
    pg.reindex();
    ph.reindex();
    if (stable) return true;
  }
}

int target_cell(const Partition& p) {
  int best = -1;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    const auto size = p.cells[c].size();
    if (size > 1 && (best < 0 || size < p.cells[best].size())) {
      best = static_cast<int>(c);
    }
  }
  return best;
}

// Depth-first individualization/refinement search for isomorphisms g -> h.
// on_leaf returns false to stop the search.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h,
                    std::function<bool(Permutation)> on_leaf)
      : g_(g), h_(h), on_leaf_(std::move(on_leaf)) {}

  void run() {
    Partition pg(g_.order()), ph(h_.order());
    descend(std::move(pg), std::move(ph));
  }

 private:
  // Returns false when the search was stopped.
  bool descend(Partition pg, Partition ph) {
    if (!refine_pair(g_, pg, h_, ph)) return true;
    if (pg.discrete()) {
      std::vector<int> image(g_.order());
      for (std::size_t c = 0; c < pg.cells.size(); ++c) {
        image[pg.cells[c][0]] = ph.cells[c][0];
      }
      Permutation map = Permutation::from_image(std::move(image));
      if (!is_isomorphism(g_, h_, map)) return true;
      return on_leaf_(std::move(map));
    }
    const int c = target_cell(pg);
    const int v = pg.cells[c].front();
    const std::vector<int> candidates = ph.cells[c];
    for (int w : candidates) {
      Partition next_g = pg, next_h = ph;
      next_g.individualize(v);
      next_h.individualize(w);
      if (!descend(std::move(next_g), std::move(next_h))) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::function<bool(Permutation)> on_leaf_;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

PermutationSet automorphisms(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.max_vertices) {
    throw LimitExceeded("automorphisms: graph has " + std::to_string(g.order()) +
                        " vertices, limit is " + std::to_string(limits.max_vertices));
  }
  if (g.order() == 0) return PermutationSet({Permutation::identity(0)});
  std::vector<Permutation> found;
  IsomorphismSearch search(g, g, [&](Permutation p) {
    found.push_back(std::move(p));
    if (found.size() > limits.max_group_order) {
      throw LimitExceeded("automorphisms: group order exceeds " +
                          std::to_string(limits.max_group_order));
    }
    return true;
  });
  search.run();
  return PermutationSet(std::move(found));
}

std::optional<Permutation> isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (sorted_degrees(g) != sorted_degrees(h)) return std::nullopt;
  if (g.order() == 0) return Permutation::identity(0);
  std::optional<Permutation> result;
  IsomorphismSearch search(g, h, [&](Permutation p) {
    result = std::move(p);
    return false;
  });
  search.run();
  return result;
}

}  // namespace kcover
