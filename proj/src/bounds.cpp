#include "ferrers/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "kernels.hpp"

namespace ferrers {

std::string to_string(Side s) { return s == Side::u ? "u" : "v"; }

InducedMatching induced_matching_number(const BipartiteGraph& g) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<Bitset> clash(m, Bitset(m));
  // e and f clash iff f touches N[u_e] ∪ N[v_e] in the sense of sharing a vertex or
  // being joined by a host edge; collect via the edges incident to the neighbours.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& a = g.edge(e);
    auto mark = [&](EdgeId f) {
      if (f != e) clash[static_cast<std::size_t>(e)].set(static_cast<std::size_t>(f));
    };
    // f with an endpoint in N(u_e) ⊆ V (includes v_e) or N(v_e) ⊆ U (includes u_e).
    for (int v : g.u_neighbors(a.u))
      for (EdgeId f : g.v_edges(v)) mark(f);
    for (int u : g.v_neighbors(a.v)) {
      EdgeId first = g.first_edge_of_u(u);
      for (std::size_t k = 0; k < g.u_neighbors(u).size(); ++k) mark(first + static_cast<EdgeId>(k));
    }
  }
  auto set = detail::maximum_independent_set(clash);
  InducedMatching out;
  out.size = static_cast<int>(set.size());
  out.edges.assign(set.begin(), set.end());
  return out;
}

bool is_induced_matching(const BipartiteGraph& g, std::span<const EdgeId> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = g.edge(edges[i]);
      const Edge& b = g.edge(edges[j]);
      if (a.u == b.u || a.v == b.v) return false;
      if (g.has_edge(a.u, b.v) || g.has_edge(b.u, a.v)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<int>> side_neighbourhoods(const BipartiteGraph& g, Side side) {
  int n = side == Side::u ? g.u_count() : g.v_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto nbrs = side == Side::u ? g.u_neighbors(x) : g.v_neighbors(x);
    out[static_cast<std::size_t>(x)].assign(nbrs.begin(), nbrs.end());
  }
  return out;
}

bool strictly_contained(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

DilworthResult dilworth_width(const BipartiteGraph& g, Side side) {
  auto nbhd = side_neighbourhoods(g, side);

  // Classes of equal neighbourhoods, numbered by their smallest member.
  std::map<std::vector<int>, int> class_of_set;
  std::vector<std::vector<int>> members;
  std::vector<const std::vector<int>*> class_set;
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    auto [it, inserted] = class_of_set.try_emplace(nbhd[x], static_cast<int>(members.size()));
    if (inserted) {
      members.emplace_back();
      class_set.push_back(&it->first);
    }
    members[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(x));
  }
  const int n = static_cast<int>(members.size());

  // Split graph of the strict order: left a -> right b iff N(a) ⊂ N(b).
  std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (strictly_contained(*class_set[static_cast<std::size_t>(a)], *class_set[static_cast<std::size_t>(b)]))
        above[static_cast<std::size_t>(a)].push_back(b);
  auto match_right = detail::maximum_bipartite_matching(above, n);

  std::vector<int> next(static_cast<std::size_t>(n), -1);
  std::vector<char> has_prev(static_cast<std::size_t>(n), 0);
  int matched = 0;
  for (int b = 0; b < n; ++b) {
    int a = match_right[static_cast<std::size_t>(b)];
    if (a >= 0) {
      next[static_cast<std::size_t>(a)] = b;
      has_prev[static_cast<std::size_t>(b)] = 1;
      ++matched;
    }
  }

  DilworthResult out;
  out.width = n - matched;
  for (int start = 0; start < n; ++start) {
    if (has_prev[static_cast<std::size_t>(start)]) continue;
    std::vector<int> chain;
    for (int c = start; c >= 0; c = next[static_cast<std::size_t>(c)])
      chain.insert(chain.end(), members[static_cast<std::size_t>(c)].begin(), members[static_cast<std::size_t>(c)].end());
    out.chains.push_back(std::move(chain));
  }

  // König: Z = vertices reachable from unmatched left vertices by alternating paths.
  std::vector<char> left_matched(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) left_matched[static_cast<std::size_t>(a)] = next[static_cast<std::size_t>(a)] >= 0;
  std::vector<char> z_left(static_cast<std::size_t>(n), 0);
  std::vector<char> z_right(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int a = 0; a < n; ++a)
    if (!left_matched[static_cast<std::size_t>(a)]) {
      z_left[static_cast<std::size_t>(a)] = 1;
      queue.push_back(a);
    }
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int b : above[static_cast<std::size_t>(a)]) {
      if (z_right[static_cast<std::size_t>(b)]) continue;
      z_right[static_cast<std::size_t>(b)] = 1;
      int a2 = match_right[static_cast<std::size_t>(b)];
      if (a2 >= 0 && !z_left[static_cast<std::size_t>(a2)]) {
        z_left[static_cast<std::size_t>(a2)] = 1;
        queue.push_back(a2);
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (z_left[static_cast<std::size_t>(c)] && !z_right[static_cast<std::size_t>(c)])
      out.antichain.push_back(members[static_cast<std::size_t>(c)].front());
  return out;
}

EdgePartition chain_decomposition_partition(const BipartiteGraph& g, Side side) {
  auto dw = dilworth_width(g, side);
  int n = side == Side::u ? g.u_count() : g.v_count();
  std::vector<int> chain_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < dw.chains.size(); ++i)
    for (int x : dw.chains[i]) chain_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
  std::vector<int> part_of(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    part_of[static_cast<std::size_t>(id)] = chain_of[static_cast<std::size_t>(side == Side::u ? e.u : e.v)];
  }
  return EdgePartition::from_assignment(part_of, dw.width);
}

ConflictGraph::ConflictGraph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  edge_count_ = static_cast<int>(twice / 2);
}

ConflictGraph conflict_graph(const BipartiteGraph& g) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<Bitset> u_adj(static_cast<std::size_t>(g.u_count()), Bitset(static_cast<std::size_t>(g.v_count())));
  for (const auto& e : g.edges()) u_adj[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    const Edge& e = g.edges()[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const Edge& f = g.edges()[b];
      if (e.u == f.u || e.v == f.v) continue;
      if (u_adj[static_cast<std::size_t>(e.u)].test(static_cast<std::size_t>(f.v))) continue;
      if (u_adj[static_cast<std::size_t>(f.u)].test(static_cast<std::size_t>(e.v))) continue;
      rows[a].set(b);
      rows[b].set(a);
    }
  }
  return ConflictGraph(std::move(rows));
}

Coloring conflict_chromatic(const ConflictGraph& cg) {
  Coloring out;
  out.color_of = detail::exact_coloring(cg.rows());
  for (int c : out.color_of) out.colors = std::max(out.colors, c + 1);
  return out;
}

std::vector<EdgeId> conflict_clique(const ConflictGraph& cg) {
  auto clique = detail::maximum_clique(cg.rows());
  return {clique.begin(), clique.end()};
}

bool is_proper_coloring(const ConflictGraph& cg, const Coloring& c) {
  if (static_cast<int>(c.color_of.size()) != cg.node_count()) return false;
  std::vector<char> used(static_cast<std::size_t>(c.colors), 0);
  for (int e = 0; e < cg.node_count(); ++e) {
    int ce = c.color_of[static_cast<std::size_t>(e)];
    if (ce < 0 || ce >= c.colors) return false;
    used[static_cast<std::size_t>(ce)] = 1;
    for (auto f = cg.row(e).find_first(); f != Bitset::npos; f = cg.row(e).find_next(f))
      if (c.color_of[f] == ce) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

int BoundsReport::lower_bound() const {
  int chi = chi_conflict ? chi_conflict->colors : static_cast<int>(conflict_clique.size());
  return std::max(nu_ind.size, chi);
}

int BoundsReport::upper_bound() const { return std::min(width_u.width, width_v.width); }

BoundsReport compute_bounds(const BipartiteGraph& g, const BoundsOptions& options) {
  BoundsReport r;
  r.u_count = g.u_count();
  r.v_count = g.v_count();
  r.edge_count = g.edge_count();
  r.nu_ind = induced_matching_number(g);
  r.width_u = dilworth_width(g, Side::u);
  r.width_v = dilworth_width(g, Side::v);
  auto cg = conflict_graph(g);
  r.conflict_edges = cg.edge_count();
  r.conflict_clique = conflict_clique(cg);
  if (options.exact_chi) r.chi_conflict = conflict_chromatic(cg);
  r.upper_side = r.width_v.width < r.width_u.width ? Side::v : Side::u;
  r.upper_partition = chain_decomposition_partition(g, r.upper_side);
  return r;
}

namespace {

std::string join_ints(const std::vector<int>& xs, const char* prefix) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << prefix << xs[i];
  return out.str();
}

std::string join_edges(const BipartiteGraph& g, std::span<const EdgeId> ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Edge& e = g.edge(ids[i]);
    out << (i ? " " : "") << e.u << "," << e.v;
  }
  return out.str();
}

}  // namespace

std::string BoundsReport::to_key_value(const BipartiteGraph& g) const {
  std::ostringstream out;
  out << "u_count = " << u_count << "\n";
  out << "v_count = " << v_count << "\n";
  out << "edges = " << edge_count << "\n";
  out << "nu_ind = " << nu_ind.size << "\n";
  out << "nu_ind_witness = " << join_edges(g, nu_ind.edges) << "\n";
  out << "width_u = " << width_u.width << "\n";
  out << "width_u_antichain = " << join_ints(width_u.antichain, "u") << "\n";
  out << "width_v = " << width_v.width << "\n";
  out << "width_v_antichain = " << join_ints(width_v.antichain, "v") << "\n";
  out << "conflict_edges = " << conflict_edges << "\n";
  out << "conflict_clique = " << conflict_clique.size() << "\n";
  if (chi_conflict) {
    out << "chi_conflict = " << chi_conflict->colors << "\n";
    out << "chi_conflict_coloring =";
    for (int c : chi_conflict->color_of) out << " " << c;
    out << "\n";
  }
  out << "lower_bound = " << lower_bound() << "\n";
  out << "upper_bound = " << upper_bound() << "\n";
  out << "upper_side = " << to_string(upper_side) << "\n";
  if (fp) out << "fp = " << *fp << "\n";
  return out.str();
}

std::string BoundsReport::to_table() const {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"bound", "value"},
      {"nu_ind (lower)", std::to_string(nu_ind.size)},
      {"conflict clique (lower)", std::to_string(conflict_clique.size())},
  };
  if (chi_conflict) rows.emplace_back("chi(C_host) (lower)", std::to_string(chi_conflict->colors));
  rows.emplace_back("width_u (upper)", std::to_string(width_u.width));
  rows.emplace_back("width_v (upper)", std::to_string(width_v.width));
  if (fp) rows.emplace_back("fp (exact)", std::to_string(*fp));
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
  return out.str();
}

}  // namespace ferrers
