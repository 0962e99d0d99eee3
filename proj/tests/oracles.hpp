#pragma once

// Brute-force reference implementations for tests. None of these call into the
// library's recognition, bounds or solver code.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ferrers/graph.hpp"

namespace oracle {

using ferrers::BipartiteGraph;
using ferrers::Edge;
using ferrers::EdgeId;

inline std::set<std::pair<int, int>> edge_set(const BipartiteGraph& g, const std::vector<EdgeId>& part) {
  std::set<std::pair<int, int>> s;
  for (EdgeId id : part) s.insert({g.edge(id).u, g.edge(id).v});
  return s;
}

// Every choice of two U and two V vertices; induced 2K2 iff the part restricted to
// them is exactly one of the two perfect matchings.
inline bool has_induced_2k2(const BipartiteGraph& g, const std::vector<EdgeId>& part) {
  auto s = edge_set(g, part);
  auto has = [&](int u, int v) { return s.count({u, v}) > 0; };
  for (int u1 = 0; u1 < g.u_count(); ++u1)
    for (int u2 = u1 + 1; u2 < g.u_count(); ++u2)
      for (int v1 = 0; v1 < g.v_count(); ++v1)
        for (int v2 = v1 + 1; v2 < g.v_count(); ++v2) {
          bool a = has(u1, v1), b = has(u1, v2), c = has(u2, v1), d = has(u2, v2);
          if ((a && d && !b && !c) || (b && c && !a && !d)) return true;
        }
  return false;
}

inline std::vector<EdgeId> all_edges(const BipartiteGraph& g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId i = 0; i < g.edge_count(); ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

inline std::vector<std::set<int>> neighbourhoods(const BipartiteGraph& g, bool u_side) {
  std::vector<std::set<int>> n(static_cast<std::size_t>(u_side ? g.u_count() : g.v_count()));
  for (const auto& e : g.edges()) {
    if (u_side) n[static_cast<std::size_t>(e.u)].insert(e.v);
    else n[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  return n;
}

// Largest family of pairwise incomparable (hence distinct) neighbourhoods, by subset enumeration.
inline int antichain_width(const BipartiteGraph& g, bool u_side) {
  auto n = neighbourhoods(g, u_side);
  std::vector<std::set<int>> distinct(n.begin(), n.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto subset = [](const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  const int k = static_cast<int>(distinct.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && (subset(distinct[static_cast<std::size_t>(i)], distinct[static_cast<std::size_t>(j)]) ||
                                                   subset(distinct[static_cast<std::size_t>(j)], distinct[static_cast<std::size_t>(i)])))
          ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline bool host_has(const BipartiteGraph& g, int u, int v) {
  return std::find(g.edges().begin(), g.edges().end(), Edge{u, v}) != g.edges().end();
}

// Induced matching by subset enumeration over at most ~20 edges.
inline int induced_matching_number(const BipartiteGraph& g) {
  const int m = g.edge_count();
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j) {
        if (!((mask >> i & 1) && (mask >> j & 1))) continue;
        const Edge& a = g.edge(i);
        const Edge& b = g.edge(j);
        if (a.u == b.u || a.v == b.v || host_has(g, a.u, b.v) || host_has(g, b.u, a.v)) ok = false;
      }
    if (ok) best = size;
  }
  return best;
}

inline bool conflicts(const BipartiteGraph& g, EdgeId x, EdgeId y) {
  const Edge& a = g.edge(x);
  const Edge& b = g.edge(y);
  return a.u != b.u && a.v != b.v && !host_has(g, a.u, b.v) && !host_has(g, b.u, a.v);
}

// Smallest k admitting a proper colouring, by plain backtracking.
inline int chromatic_number(int n, const std::function<bool(int, int)>& adjacent) {
  if (n == 0) return 0;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> fill = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w = 0; w < v && ok; ++w)
        if (colour[static_cast<std::size_t>(w)] == c && adjacent(v, w)) ok = false;
      if (!ok) continue;
      colour[static_cast<std::size_t>(v)] = c;
      if (fill(v + 1, k)) return true;
    }
    colour[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (fill(0, k)) return k;
}

inline BipartiteGraph random_bipartite(std::mt19937& rng, int max_side, double density) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::bernoulli_distribution coin(density);
  int nu = side(rng), nv = side(rng);
  std::vector<Edge> edges;
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return BipartiteGraph(nu, nv, std::move(edges));
}

// Random graph with exactly `m` edges (capped by nu*nv) on the given sides.
inline BipartiteGraph random_with_edges(std::mt19937& rng, int nu, int nv, int m) {
  std::vector<Edge> all;
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
  return BipartiteGraph(nu, nv, std::move(all));
}

inline std::vector<EdgeId> random_part(std::mt19937& rng, const BipartiteGraph& g, int max_size) {
  auto all = all_edges(g);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> len(0, std::min<int>(max_size, static_cast<int>(all.size())));
  all.resize(static_cast<std::size_t>(len(rng)));
  return all;
}

// Edge subsets (as bitmasks over edge ids) whose edges form one connected piece.
inline bool connected_subset(const BipartiteGraph& g, unsigned long mask) {
  std::vector<EdgeId> ids;
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    if (mask >> i & 1) ids.push_back(i);
  if (ids.empty()) return false;
  std::vector<char> reached(ids.size(), 0);
  reached[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (reached[i]) continue;
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (reached[j] && (g.edge(ids[i]).u == g.edge(ids[j]).u || g.edge(ids[i]).v == g.edge(ids[j]).v)) {
          reached[i] = 1;
          grew = true;
          break;
        }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char r) { return r != 0; });
}

}  // namespace oracle
